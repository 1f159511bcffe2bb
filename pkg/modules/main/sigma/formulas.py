from dataclasses import dataclass
from typing import Optional
import modules.main.util.constants as C
from modules.main.degseq.degree_sequence import PotentInputException
from modules.main.graph.patterns import PatternGraph


@dataclass(frozen=True)
class FormulaValue:
    """
    A closed-form threshold value.

    Attributes:
        value (int): The even value of the formula.
        valid (bool): True iff (m, n) lies in a range where the formula is a proven value of sigma(H, n).
        source (str): The formula the value came from.
    """

    value: int
    valid: bool
    source: str


def _check_positive(**params) -> None:
    for name, value in params.items():
        if value < 1:
            raise PotentInputException(f"`{name}` must be at least 1, got `{value}`.")


def formula_odd_cycle(m: int, n: int) -> FormulaValue:
    """
    sigma(C_{2m+1}, n) = m(2n - m - 1) + 2. Valid for m >= 3, n >= 3m, and for m = 2, n >= 5 where it equals the known
    sigma(C_5, n) = 4n - 4.
    """

    _check_positive(m=m, n=n)
    valid = (m >= 3 and n >= 3 * m) or (m == 2 and n >= 5)
    return FormulaValue(value=m * (2 * n - m - 1) + 2, valid=valid, source=C.ODD_CYCLE_SOURCE)


def formula_even_cycle(m: int, n: int) -> FormulaValue:
    """
    sigma(C_{2m+2}, n) = m(2n - m - 1) + 4. Valid for m >= 3, n >= 5m - 2, and for m = 2, n >= 7 where it equals the known
    sigma(C_6, n) = 4n - 2. For smaller n the even formula can be wrong, so the value is flagged.
    """

    _check_positive(m=m, n=n)
    valid = (m >= 3 and n >= 5 * m - 2) or (m == 2 and n >= 7)
    return FormulaValue(value=m * (2 * n - m - 1) + 4, valid=valid, source=C.EVEN_CYCLE_SOURCE)


def lemma4_upper_bound(m: int, t: int) -> int:
    """
    The upper bound sigma(C_{2m+2}, n) <= m(2n - m - 1) + 2m + 2 - 2[t/2] with n = 3m + t.

    Throws PotentInputException unless m >= 3 and 0 <= t <= 2m - 2.
    """

    if m < 3:
        raise PotentInputException(f"This upper bound needs m >= 3, got `{m}`.")
    if not 0 <= t <= 2 * m - 2:
        raise PotentInputException(f"This upper bound needs 0 <= t <= 2m - 2 = {2 * m - 2}, got `{t}`.")
    n = 3 * m + t
    return m * (2 * n - m - 1) + 2 * m + 2 - 2 * (t // 2)


def even_cycle_upper_bound(m: int, n: int) -> FormulaValue:
    """The upper bound sigma(C_{2m+2}, n) <= m(2n - m - 1) + 2m + 2, proven for m >= 2, n >= 3m."""

    _check_positive(m=m, n=n)
    return FormulaValue(
        value=m * (2 * n - m - 1) + 2 * m + 2,
        valid=m >= 2 and n >= 3 * m,
        source="m(2n-m-1)+2m+2"
    )


def formula_c4(n: int) -> FormulaValue:
    """sigma(C_4, n) = 2[(3n - 1)/2] for n >= 4."""

    _check_positive(n=n)
    return FormulaValue(value=2 * ((3 * n - 1) // 2), valid=n >= 4, source=C.C4_SOURCE)


def formula_matching(p: int, n: int) -> FormulaValue:
    """
    sigma(pK_2, n) = (p - 1)(2n - 2) + 2 for p >= 2 (and n >= 2p, so pK_2 fits). Flagged valid over that whole range as
    published, though the oracle finds sigma(3K_2, 7) = 24 below the formula's 26.
    """

    _check_positive(p=p, n=n)
    return FormulaValue(value=(p - 1) * (2 * n - 2) + 2, valid=p >= 2 and n >= 2 * p, source=C.MATCHING_SOURCE)


def formula_clique(k: int, n: int) -> FormulaValue:
    """
    The Erdős–Jacobson–Lehel value (k - 2)(2n - k + 1) + 2. It's a lower bound for every k; only k = 3, n >= 6 is flagged
    valid here.
    """

    _check_positive(k=k, n=n)
    return FormulaValue(value=(k - 2) * (2 * n - k + 1) + 2, valid=k == 3 and n >= 6, source=C.CLIQUE_SOURCE)


def closed_form(H: PatternGraph, n: int) -> Optional[FormulaValue]:
    """
    Look up the closed form for sigma(H, n).

    Returns:
        FormulaValue: The value, its validity flag and source, or None if no formula covers H.
    """

    k = H.size
    if H.kind == C.MATCHING:
        return formula_matching(k, n)
    if H.kind == C.CLIQUE:
        return formula_clique(k, n) if k >= 3 else None

    if k == 3:
        return formula_clique(3, n)
    if k == 4:
        return formula_c4(n)
    if k == 6 and n == 6:
        return FormulaValue(value=24, valid=True, source=C.C6_AT_6_SOURCE)
    if k % 2:
        return formula_odd_cycle((k - 1) // 2, n)
    return formula_even_cycle((k - 2) // 2, n)
