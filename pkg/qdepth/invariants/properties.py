"""
Structural statements about quasi depth, as checks on concrete instances.

Each ``check_*`` computes both sides and raises InvariantViolationError when
the proved relation fails. ``collapse_condition`` is a diagnostic only.
"""

from dataclasses import dataclass
from typing import Tuple

from qdepth.errors import (
    AmbientMismatchError,
    InvariantViolationError,
    NotRegularError,
    PreconditionError,
)
from qdepth.ideals import Monomial, MonomialIdeal
from qdepth.invariants.beta import BetaTable, beta_table
from qdepth.invariants.quasi import (
    qdepth,
    qdepth_alpha,
    qdepth_ideal,
    qdepth_quotient,
)
from qdepth.numeric import binom
from qdepth.poset import (
    AlphaMode,
    SubsetPoset,
    alpha_by_inclusion_exclusion,
    alpha_vector,
)


def _violation(message: str, **details) -> InvariantViolationError:
    return InvariantViolationError(message, details=details)


def check_extension_shift(J: MonomialIdeal, I: MonomialIdeal) -> bool:
    """qdepth over one more (fresh) variable is qdepth + 1."""
    before = qdepth(J, I).value
    after = qdepth(J.extend(1), I.extend(1)).value
    if after != before + 1:
        raise _violation(
            "Extension by a fresh variable did not shift qdepth by one",
            J=str(J), I=str(I), before=before, after=after,
        )
    return True


def is_regular(ideal: MonomialIdeal, u: Monomial) -> bool:
    """A monomial of positive degree is regular on S/I iff its support avoids every generator."""
    return u.degree >= 1 and not (u.support & ideal.support)


def check_regular_sandwich(ideal: MonomialIdeal, u: Monomial) -> Tuple[int, int, int]:
    """
    qdepth(S/I) >= qdepth(S/(I,u)) >= qdepth(S/I) - 1 for u regular on S/I,
    with equality on the right when u is a variable.

    Returns:
        (qdepth(S/I), qdepth(S/(I,u)), qdepth(S/I) - 1)
    """
    if u.n != ideal.n:
        raise AmbientMismatchError(f"u has {u.n} variables, I has {ideal.n}")
    if ideal.is_unit:
        raise PreconditionError("S/I is zero for I = S", details={"ideal": str(ideal)})
    if not is_regular(ideal, u):
        raise NotRegularError(details={"ideal": str(ideal), "u": str(u)})
    top = qdepth_quotient(ideal).value
    middle = qdepth_quotient(ideal.add_generator(u)).value
    bottom = top - 1
    if not top >= middle >= bottom:
        raise _violation(
            "Regular-element sandwich failed",
            ideal=str(ideal), u=str(u), top=top, middle=middle,
        )
    if u.degree == 1 and middle != bottom:
        raise _violation(
            "A regular variable must lower qdepth(S/I) by exactly one",
            ideal=str(ideal), u=str(u), top=top, middle=middle,
        )
    return top, middle, bottom


def check_regular_ideal_bound(ideal: MonomialIdeal, u: Monomial) -> Tuple[int, int]:
    """
    qdepth((I,u)) >= min{qdepth(I), qdepth(S/I)} for u regular on S/I.

    Returns:
        (qdepth((I,u)), the bound)
    """
    if ideal.is_unit:
        raise PreconditionError("S/I is zero for I = S", details={"ideal": str(ideal)})
    if not is_regular(ideal, u):
        raise NotRegularError(details={"ideal": str(ideal), "u": str(u)})
    value = qdepth_ideal(ideal.add_generator(u)).value
    parts = [qdepth_quotient(ideal).value]
    if not ideal.is_zero:
        parts.append(qdepth_ideal(ideal).value)
    bound = min(parts)
    if value < bound:
        raise _violation(
            "qdepth((I,u)) below min{qdepth(I), qdepth(S/I)}",
            ideal=str(ideal), u=str(u), value=value, bound=bound,
        )
    return value, bound


def check_colon_invariance(ideal: MonomialIdeal, u: Monomial) -> Tuple[int, int]:
    """
    qdepth(I : u) = qdepth(I) when u ∉ I and I = u (I : u).

    Returns:
        (qdepth(I : u), qdepth(I))
    """
    colon = ideal.colon(u)
    if ideal.contains(u) or colon.multiply(u) != ideal or ideal.is_zero:
        raise PreconditionError(
            "Needs a nonzero I with u ∉ I and I = u(I:u)",
            details={"ideal": str(ideal), "u": str(u)},
        )
    lhs = qdepth_ideal(colon).value
    rhs = qdepth_ideal(ideal).value
    if lhs != rhs:
        raise _violation(
            "qdepth(I:u) differs from qdepth(I)", ideal=str(ideal), u=str(u),
            colon=lhs, value=rhs,
        )
    return lhs, rhs


def check_multiplication_invariance(ideal: MonomialIdeal, k: int = 1) -> Tuple[int, int]:
    """
    qdepth(I S) = qdepth(u I S) for u the product of k fresh variables.

    Returns:
        (qdepth of I over n + k variables, qdepth of u I)
    """
    if k < 1 or ideal.is_zero:
        raise PreconditionError("Needs a nonzero ideal and k >= 1")
    extended = ideal.extend(k)
    u = Monomial(((0,) * ideal.n) + (1,) * k)
    lhs = qdepth_ideal(extended).value
    rhs = qdepth_ideal(extended.multiply(u)).value
    if lhs != rhs:
        raise _violation(
            "Multiplication by fresh variables changed qdepth",
            ideal=str(ideal), k=k, before=lhs, after=rhs,
        )
    return lhs, rhs


def check_disjoint_union_bound(first: SubsetPoset, second: SubsetPoset) -> Tuple[int, int]:
    """
    qdepth(P' ∪ P'') >= min{qdepth(P'), qdepth(P'')} for disjoint nonempty families.

    Returns:
        (qdepth of the union, the bound)
    """
    union = first.union(second)
    value = qdepth_alpha(alpha_vector(union)).value
    bound = min(
        qdepth_alpha(alpha_vector(first)).value,
        qdepth_alpha(alpha_vector(second)).value,
    )
    if value < bound:
        raise _violation("Disjoint-union bound failed", value=value, bound=bound)
    return value, bound


def check_short_exact_bound(J: MonomialIdeal, I: MonomialIdeal) -> Tuple[int, int]:
    """
    qdepth(S/I) >= min{qdepth(S/J), qdepth(J/I)} for I ⊊ J ⊊ S.

    Returns:
        (qdepth(S/I), the bound)
    """
    if J.is_unit or J == I:
        raise PreconditionError("Needs I ⊊ J ⊊ S")
    value = qdepth_quotient(I).value
    bound = min(qdepth_quotient(J).value, qdepth(J, I).value)
    if value < bound:
        raise _violation(
            "Short exact sequence bound failed", J=str(J), I=str(I),
            value=value, bound=bound,
        )
    return value, bound


def check_colon_sequence_bound(ideal: MonomialIdeal, u: Monomial) -> Tuple[int, int]:
    """
    qdepth(S/I) >= min{qdepth(S/(I:u)), qdepth(S/(I,u))} for u ∉ I.

    Returns:
        (qdepth(S/I), the bound)
    """
    if ideal.contains(u):
        raise PreconditionError("u must not lie in I", details={"u": str(u)})
    value = qdepth_quotient(ideal).value
    parts = [qdepth_quotient(ideal.colon(u)).value]
    with_u = ideal.add_generator(u)
    if not with_u.is_unit:
        parts.append(qdepth_quotient(with_u).value)
    bound = min(parts)
    if value < bound:
        raise _violation(
            "Colon sequence bound failed", ideal=str(ideal), u=str(u),
            value=value, bound=bound,
        )
    return value, bound


def _check_kkk_input(ideal: MonomialIdeal, s: int, d: int) -> None:
    if not ideal.squarefree:
        raise PreconditionError("I' must be squarefree")
    if s < 1:
        raise PreconditionError(f"s = deg(u) must be at least 1, got {s}")
    if d < 0:
        raise PreconditionError(f"d must be non-negative, got {d}")


def lemma_kkk_table(ideal: MonomialIdeal, s: int, d: int) -> BetaTable:
    """
    β^{d+s}(S/(I,u)) for I = I'S and u = x_{m+1}...x_{m+s}, from α(S'/I') alone.

    I' lives in m variables and s = n - m is the degree of u. With β^d = β^d(S'/I')
    and α = α(S'/I'):

        β_k^{d+s} = β_k^d - β_{k-s}^d                                    0 <= k <= d
        β_k^{d+s} = Σ_{l=0}^{k-d-1} C(k-d-1, l) α_{d+1+l} - β_{k-s}^d    d < k <= d+s

    with β_j^d = 0 for j < 0. The returned table carries α(S/(I,u)) as its source.
    """
    _check_kkk_input(ideal, s, d)
    small = alpha_by_inclusion_exclusion(ideal, AlphaMode.QUOTIENT)
    base = beta_table(small, d)

    def shifted(j: int) -> int:
        return base[j] if 0 <= j <= d else 0

    entries = []
    for k in range(d + s + 1):
        if k <= d:
            head = base[k]
        else:
            head = sum(
                binom(k - d - 1, ell) * small[d + 1 + ell] for ell in range(k - d)
            )
        entries.append(head - shifted(k - s))

    big = ideal.extend(s)
    u = Monomial(((0,) * ideal.n) + (1,) * s)
    source = alpha_by_inclusion_exclusion(big.add_generator(u), AlphaMode.QUOTIENT)
    return BetaTable(d=d + s, entries=tuple(entries), source_alpha=source)


@dataclass(frozen=True)
class CollapseDiagnostic:
    """
    Sufficient condition for qdepth(S/(I,u)) = qdepth(S/I) - 1.

    Attributes:
        d: qdepth(S'/I')
        lhs: α_{d+1}(S'/I')
        rhs: β^d_{d+1-s}(S'/I'), 0 when the index is negative
        holds: lhs < rhs
    """

    d: int
    lhs: int
    rhs: int
    holds: bool


def collapse_condition(ideal: MonomialIdeal, s: int) -> CollapseDiagnostic:
    """Evaluate α_{d+1}(S'/I') < β^d_{d+1-s}(S'/I') with d = qdepth(S'/I'). Never asserted."""
    _check_kkk_input(ideal, s, 0)
    small = alpha_by_inclusion_exclusion(ideal, AlphaMode.QUOTIENT)
    d = qdepth_alpha(small).value
    index = d + 1 - s
    rhs = beta_table(small, d)[index] if 0 <= index <= d else 0
    lhs = small[d + 1]
    return CollapseDiagnostic(d=d, lhs=lhs, rhs=rhs, holds=lhs < rhs)
