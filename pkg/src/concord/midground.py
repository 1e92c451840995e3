"""Middle grounds: postulate checking, existence tests, and construction.

A middle ground for several stakeholders is a statement set that is non-trivial
(P1), collapses to the plain union whenever that union is consistent (P2),
stays compatible with every individual stakeholder statement (P3), only says
things some stakeholder already implies (P4), and is entailment-maximal among
sets with these properties (P5).

Construction follows the candidate-filter route: keep the statements of a
language that individually pass the non-triviality, compatibility and
entailment filters, then return all cardinality-maximal consistent subsets of
that pool. Equivalent statements are grouped first so the search runs over
equivalence classes; a maximal subset always takes whole classes.
"""

from __future__ import annotations

import itertools
from typing import Sequence

import numpy as np

from .domain import (
    Alternative,
    Combiner,
    Profile,
    Statement,
    Triviality,
    VariableSpace,
    dedupe_statements,
)
from .errors import CapacityError, DomainMismatchError, TrivialStakeholderError
from .oracle import _canonical_grounds, brute_p5
from .reasoner import (
    DEFAULT_LIMITS,
    Limits,
    _lex_consistent_from_signs,
    classify,
    classify_lex,
    entails,
    equivalent,
    is_consistent,
    is_consistent_lex,
    sign_matrix,
)
from .results import (
    FAIL,
    NOT_CHECKED,
    PASS,
    ExistenceResult,
    MiddleGroundSet,
    PostulateCheck,
    PostulateReport,
)


def statement_triviality(
    s: Statement,
    space: VariableSpace,
    c: Combiner,
    model_class: str,
    limits: Limits = DEFAULT_LIMITS,
) -> Triviality:
    if model_class == "lex":
        return classify_lex(s, space, c)
    return classify(s, space, c, limits)


def _require_nontrivial(profile: Profile, limits: Limits) -> None:
    """Every stakeholder set must be consistent and falsifiable."""
    if not profile.stakeholders:
        raise TrivialStakeholderError("profile has no stakeholders")
    for sh in profile.stakeholders:
        res = is_consistent(
            sh.statements, profile.space, profile.combiner, profile.model_class, limits
        )
        if not res.consistent:
            raise TrivialStakeholderError(f"stakeholder {sh.name!r} is inconsistent")
        if not any(
            statement_triviality(
                s, profile.space, profile.combiner, profile.model_class, limits
            )
            is not Triviality.TAUTOLOGY
            for s in sh.statements
        ):
            raise TrivialStakeholderError(
                f"stakeholder {sh.name!r} asserts nothing falsifiable"
            )


def full_language(
    space: VariableSpace, limits: Limits = DEFAULT_LIMITS
) -> tuple[Statement, ...]:
    """Every weak and strict comparison between two alternatives of the space."""
    n_alts = 1
    for dom in space.domains:
        n_alts *= len(dom)
    if 2 * n_alts * n_alts > limits.max_language:
        raise CapacityError(
            f"full language has {2 * n_alts * n_alts} statements, "
            f"cap is {limits.max_language}"
        )
    out: list[Statement] = []
    alts = list(space.alternatives())
    for a, b in itertools.product(alts, alts):
        out.append(Statement(a, b, strict=False))
        out.append(Statement(a, b, strict=True))
    return tuple(out)


def binary_language(space: VariableSpace) -> tuple[Statement, ...]:
    """All statements over the binary space in per-variable sign form.

    One pair of sides per sign vector: a variable carries (1,0), (0,1) or
    (0,0) as the left/right values. Under lexicographic models every statement
    is equivalent to its sign form, so this set is complete for that class.
    """
    out: list[Statement] = []
    for signs in itertools.product((1, 0, -1), repeat=space.size):
        left = Alternative(tuple(1 if s > 0 else 0 for s in signs))
        right = Alternative(tuple(1 if s < 0 else 0 for s in signs))
        out.append(Statement(left, right, strict=False))
        out.append(Statement(left, right, strict=True))
    return tuple(out)


def lex_candidates(space: VariableSpace) -> tuple[Statement, ...]:
    """The 2|V| statements that decide lexicographic existence.

    For each variable v: the weak statement saying "everything except v beats
    v alone", and the strict statement saying "everything except v beats the
    all-zero alternative". A set of stakeholders admits a middle ground exactly
    when one of these survives the compatibility and entailment filters.
    """
    n = space.size
    weak: list[Statement] = []
    strict: list[Statement] = []
    for v in range(n):
        others = Alternative(tuple(0 if u == v else 1 for u in range(n)))
        only_v = Alternative(tuple(1 if u == v else 0 for u in range(n)))
        zero = Alternative((0,) * n)
        weak.append(Statement(others, only_v, strict=False))
        strict.append(Statement(others, zero, strict=True))
    return tuple(weak + strict)


def hier_candidates(
    space: VariableSpace, c: Combiner, limits: Limits = DEFAULT_LIMITS
) -> tuple[Statement, ...]:
    """All non-trivial statements of the space's full language.

    Trivial statements can never contribute to a middle ground: a tautology
    adds nothing a set does not already say, and a contradiction breaks
    consistency outright. So existence and construction may restrict their
    scans to this set without losing anything up to logical equivalence.
    """
    out = []
    for s in full_language(space, limits):
        if classify(s, space, c, limits) is Triviality.NON_TRIVIAL:
            out.append(s)
    return tuple(out)


def _candidate_pool(
    profile: Profile, language: Sequence[Statement], limits: Limits
) -> tuple[Statement, ...]:
    """Language statements passing the three per-statement filters."""
    sp, c, mc = profile.space, profile.combiner, profile.model_class
    union = profile.union_statements()
    pool: list[Statement] = []
    for s in dedupe_statements(language):
        if statement_triviality(s, sp, c, mc, limits) is not Triviality.NON_TRIVIAL:
            continue
        if any(not is_consistent((s, u), sp, c, mc, limits).consistent for u in union):
            continue
        if not any(
            entails(sh.statements, s, sp, c, mc, limits)
            for sh in profile.stakeholders
        ):
            continue
        pool.append(s)
    return tuple(pool)


def exists_mg_lex(
    profile: Profile, limits: Limits = DEFAULT_LIMITS
) -> ExistenceResult:
    """Middle-ground existence for lexicographic profiles, in closed form.

    When the union is inconsistent, existence reduces to scanning the 2|V|
    candidate statements; both filters have per-variable sign
    characterizations, so the scan is a handful of array reductions. The
    reported stats carry the nominal check counts of the direct procedure:
    2|V|·|union| pairwise consistency checks and 2|V|·n entailment checks.
    """
    if profile.model_class != "lex":
        raise DomainMismatchError("exists_mg_lex needs a lexicographic profile")
    if not profile.stakeholders:
        raise TrivialStakeholderError("profile has no stakeholders")
    sp, c = profile.space, profile.combiner
    nvars = sp.size
    union = profile.union_statements()
    signs, strict = sign_matrix(union, c)
    union_index = {s: i for i, s in enumerate(union)}
    # Precondition and union checks run on row slices of the one sign matrix
    # instead of re-deriving per-stakeholder matrices.
    tautology_row = np.where(
        strict, (signs > 0).all(axis=1), (signs >= 0).all(axis=1)
    )
    stakeholder_rows: list[np.ndarray] = []
    for sh in profile.stakeholders:
        rows = np.array(
            [union_index[s] for s in dedupe_statements(sh.statements)], dtype=np.intp
        )
        stakeholder_rows.append(rows)
        if not _lex_consistent_from_signs(signs[rows], strict[rows], nvars):
            raise TrivialStakeholderError(f"stakeholder {sh.name!r} is inconsistent")
        if bool(tautology_row[rows].all()):
            raise TrivialStakeholderError(
                f"stakeholder {sh.name!r} asserts nothing falsifiable"
            )
    if _lex_consistent_from_signs(signs, strict, nvars):
        return ExistenceResult(
            True, via_union=True, stats={"pairwise_checks": 0, "entailment_checks": 0}
        )
    neg = signs < 0
    pos = signs > 0
    zero = signs == 0
    negsum = neg.sum(axis=1, keepdims=True)
    possum = pos.sum(axis=1, keepdims=True)
    zerosum = zero.sum(axis=1, keepdims=True)
    st = strict[:, None]
    # Weak candidate for v clashes with a weak union statement that loses
    # everywhere outside v, and with a strict one whose only winning spot can
    # be v while it offers no ties to hide behind.
    weak_clash = (~st & (negsum - neg == nvars - 1)) | (
        st & (possum - pos == 0) & ((possum == 0) | (zerosum == 0))
    )
    # Strict candidate for v clashes with a weak union statement that loses
    # everywhere outside v without winning at v, and with any strict union
    # statement that wins nowhere.
    strict_clash = (~st & (negsum - neg == nvars - 1) & ~pos) | (
        st & (possum == 0)
    )
    ok_weak = ~weak_clash.any(axis=0)
    ok_strict = ~strict_clash.any(axis=0)
    # Entailment by one stakeholder: the weak candidate for v follows from any
    # statement losing at v; the strict one also from a strict statement that
    # ties at v.
    ent_weak = np.zeros(nvars, dtype=bool)
    ent_strict = np.zeros(nvars, dtype=bool)
    for rows in stakeholder_rows:
        ent_weak |= neg[rows].any(axis=0)
        ent_strict |= (neg[rows] | (zero[rows] & st[rows])).any(axis=0)
    ok_weak &= ent_weak
    ok_strict &= ent_strict
    stats = {
        "pairwise_checks": 2 * nvars * len(union),
        "entailment_checks": 2 * nvars * len(profile.stakeholders),
    }
    candidates = lex_candidates(sp)
    for v in range(nvars):
        if ok_weak[v]:
            return ExistenceResult(True, witness=candidates[v], stats=stats)
    for v in range(nvars):
        if ok_strict[v]:
            return ExistenceResult(True, witness=candidates[nvars + v], stats=stats)
    return ExistenceResult(False, stats=stats)


def exists_mg_hier(
    profile: Profile, limits: Limits = DEFAULT_LIMITS
) -> ExistenceResult:
    """Middle-ground existence for hierarchical profiles.

    Consistent union settles it. Otherwise a middle ground exists exactly when
    some non-trivial statement passes the compatibility and entailment
    filters, since any single such statement is itself consistent.
    """
    if profile.model_class != "hier":
        raise DomainMismatchError("exists_mg_hier needs a hierarchical profile")
    _require_nontrivial(profile, limits)
    sp, c = profile.space, profile.combiner
    union = profile.union_statements()
    if is_consistent(union, sp, c, "hier", limits).consistent:
        return ExistenceResult(True, via_union=True)
    cands = hier_candidates(sp, c, limits)
    pool = _candidate_pool(profile, cands, limits)
    stats = {"candidates": len(cands), "pool": len(pool)}
    if pool:
        return ExistenceResult(True, witness=pool[0], stats=stats)
    return ExistenceResult(False, stats=stats)


def _resolve_language(
    profile: Profile, language, limits: Limits
) -> tuple[tuple[Statement, ...], bool]:
    """Materialize the language argument; returns (statements, exhaustive)."""
    lex = profile.model_class == "lex"
    if language is None:
        language = "binary" if lex else "full"
    if isinstance(language, str):
        if language == "full":
            return full_language(profile.space, limits), True
        if language == "binary":
            return binary_language(profile.space), lex
        if language == "candidates":
            if lex:
                return lex_candidates(profile.space), False
            return hier_candidates(profile.space, profile.combiner, limits), True
        raise ValueError(f"unknown language selector {language!r}")
    lang = dedupe_statements(language)
    if len(lang) > limits.max_language:
        raise CapacityError(
            f"language has {len(lang)} statements, cap is {limits.max_language}"
        )
    return lang, False


def _group_equivalent(
    pool: Sequence[Statement], profile: Profile, limits: Limits
) -> list[list[Statement]]:
    """Partition the pool into logical-equivalence classes."""
    sp, c, mc = profile.space, profile.combiner, profile.model_class
    if mc == "lex":
        keyed: dict[tuple, list[Statement]] = {}
        for s in pool:
            signs = tuple(
                c.compare_values(a, b) for a, b in zip(s.left.values, s.right.values)
            )
            keyed.setdefault((signs, s.strict), []).append(s)
        return list(keyed.values())
    classes: list[list[Statement]] = []
    for s in pool:
        for cls in classes:
            if equivalent((s,), (cls[0],), sp, c, mc, limits):
                cls.append(s)
                break
        else:
            classes.append([s])
    return classes


def construct_mgs(
    profile: Profile,
    language=None,
    limits: Limits = DEFAULT_LIMITS,
) -> MiddleGroundSet:
    """All middle grounds over a statement language, up to equivalence.

    ``language`` may be an explicit statement sequence or one of the selectors
    ``"full"``, ``"binary"``, ``"candidates"``; the default is the sign-form
    binary language for lexicographic profiles and the full language for
    hierarchical ones. The result is exhaustive (complete for the space's
    whole language up to equivalence) except for explicit sequences, the
    binary selector on hierarchical profiles, and the candidate selector on
    lexicographic profiles, where the scan covers just what was given.

    A consistent union short-circuits to the single ground it defines. The
    returned grounds are cardinality-maximal consistent subsets of the
    filtered pool; distinct ones are never equivalent, so no further
    deduplication happens beyond dropping identical subsets.
    """
    _require_nontrivial(profile, limits)
    sp, c, mc = profile.space, profile.combiner, profile.model_class
    union = profile.union_statements()
    if is_consistent(union, sp, c, mc, limits).consistent:
        return MiddleGroundSet(
            grounds=_canonical_grounds((union,)),
            exhaustive=True,
            stats={"via_union": True},
        )
    lang, exhaustive = _resolve_language(profile, language, limits)
    pool = _candidate_pool(profile, lang, limits)
    stats: dict = {
        "language": len(lang),
        "pool": len(pool),
        "via_union": False,
    }
    if not pool:
        stats["classes"] = 0
        stats["nodes"] = 0
        return MiddleGroundSet(grounds=(), exhaustive=exhaustive, stats=stats)
    classes = _group_equivalent(pool, profile, limits)
    order = sorted(
        range(len(classes)), key=lambda i: (-len(classes[i]), i)
    )
    ordered = [classes[i] for i in order]
    weights = [len(cls) for cls in ordered]
    suffix = [0] * (len(ordered) + 1)
    for i in range(len(ordered) - 1, -1, -1):
        suffix[i] = suffix[i + 1] + weights[i]
    best = 0
    found: list[tuple[int, ...]] = []
    nodes = 0

    def descend(i: int, picked: tuple[int, ...], reps: tuple[Statement, ...], weight: int) -> None:
        nonlocal best, found, nodes
        nodes += 1
        if i == len(ordered):
            if weight > best:
                best = weight
                found = [picked]
            elif weight == best and weight > 0:
                found.append(picked)
            return
        if weight + suffix[i] < best:
            return
        trial = reps + (ordered[i][0],)
        if is_consistent(trial, sp, c, mc, limits).consistent:
            descend(i + 1, picked + (i,), trial, weight + weights[i])
        descend(i + 1, picked, reps, weight)

    descend(0, (), (), 0)
    stats["classes"] = len(classes)
    stats["nodes"] = nodes
    grounds = [
        tuple(itertools.chain.from_iterable(ordered[i] for i in picked))
        for picked in found
    ]
    return MiddleGroundSet(
        grounds=_canonical_grounds(grounds), exhaustive=exhaustive, stats=stats
    )


def check_postulates(
    candidate: Sequence[Statement],
    profile: Profile,
    check_p5: bool = False,
    limits: Limits = DEFAULT_LIMITS,
    p3_over_sets: bool = False,
) -> PostulateReport:
    """Evaluate a candidate set against the five middle-ground postulates.

    The entailment-maximality postulate is only decided when ``check_p5`` is
    set: with a consistent union it reduces to two entailment questions against
    the union, otherwise it runs the oracle scan over the default language and
    reports not-checked when that scan is out of capacity.

    ``p3_over_sets`` switches the compatibility postulate from its literal
    per-statement form ({candidate statement, stakeholder statement} pairs) to
    a stronger whole-set variant ({candidate statement} against each full
    stakeholder set). The literal form is the default.
    """
    _require_nontrivial(profile, limits)
    sp, c, mc = profile.space, profile.combiner, profile.model_class
    cand = dedupe_statements(candidate)
    union = profile.union_statements()

    consistent = is_consistent(cand, sp, c, mc, limits).consistent
    falsifiable = any(
        statement_triviality(s, sp, c, mc, limits) is not Triviality.TAUTOLOGY
        for s in cand
    )
    p1 = PostulateCheck(PASS if consistent and falsifiable else FAIL)

    union_consistent = is_consistent(union, sp, c, mc, limits).consistent
    if union_consistent:
        p2 = PostulateCheck(PASS if equivalent(cand, union, sp, c, mc, limits) else FAIL)
    else:
        p2 = PostulateCheck(PASS)

    p3_bad: list[Statement] = []
    for s in cand:
        if p3_over_sets:
            bad = any(
                not is_consistent((s,) + sh.statements, sp, c, mc, limits).consistent
                for sh in profile.stakeholders
            )
        else:
            bad = any(
                not is_consistent((s, u), sp, c, mc, limits).consistent for u in union
            )
        if bad:
            p3_bad.append(s)
    p3 = PostulateCheck(PASS if not p3_bad else FAIL, tuple(p3_bad))

    p4_bad = tuple(
        s
        for s in cand
        if not any(
            entails(sh.statements, s, sp, c, mc, limits)
            for sh in profile.stakeholders
        )
    )
    p4 = PostulateCheck(PASS if not p4_bad else FAIL, p4_bad)

    if not check_p5:
        p5 = PostulateCheck(NOT_CHECKED)
    elif union_consistent:
        # Any competing set must be equivalent to the union, so maximality
        # fails exactly when the union says strictly more than the candidate.
        union_stronger = all(
            entails(union, s, sp, c, mc, limits) for s in cand
        ) and not all(entails(cand, u, sp, c, mc, limits) for u in union)
        p5 = PostulateCheck(FAIL if union_stronger else PASS)
    else:
        try:
            if mc == "lex":
                lang = binary_language(sp)
            else:
                lang = hier_candidates(sp, c, limits)
            ok = brute_p5(cand, profile, lang, limits.oracle_budget)
            p5 = PostulateCheck(PASS if ok else FAIL)
        except CapacityError:
            p5 = PostulateCheck(NOT_CHECKED)
    return PostulateReport(p1, p2, p3, p4, p5)
