from fractions import Fraction

from hypothesis import strategies as st

from polyseq.exact import Poly

small_fracs = st.fractions(min_value=-50, max_value=50, max_denominator=12)
small_ints = st.integers(min_value=-30, max_value=30)
polys = st.lists(small_fracs, max_size=7).map(Poly)
nonzero_polys = polys.filter(lambda p: not p.is_zero())


def P(*desc) -> Poly:
    """Shorthand: P(3, 4) is 3x+4."""
    return Poly.from_descending([Fraction(c) for c in desc])


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
