import pytest

from qsymgraph.graphs import cartesian_product_with_edge, from_circulant_spec
from qsymgraph.residue_groups import circulant_type_data
from qsymgraph.symmetry import circulant_orbitals, orbitals


def circ(spec):
    g = from_circulant_spec(spec)
    return g, circulant_type_data(g.neighbors(0), g.n)


def circ_orbitals(spec):
    return circulant_orbitals(circ(spec)[1])


def primes_upto(n):
    return [p for p in range(2, n + 1) if all(p % d for d in range(2, int(p ** 0.5) + 1))]


@pytest.fixture(scope="session")
def prism():
    return cartesian_product_with_edge(from_circulant_spec("C6"))


@pytest.fixture(scope="session")
def prism_orbitals(prism):
    return orbitals(prism)


# one PASS/FAIL line per acceptance criterion at the end of the run
_criteria: dict[str, str] = {}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when == "call" or report.failed:
        _criteria.setdefault(report.nodeid, "PASS" if report.passed else "FAIL")
        if report.failed:
            _criteria[report.nodeid] = "FAIL"


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for nodeid, outcome in sorted(_criteria.items()):
        name = nodeid.split("::")[-1][len("test_criterion_"):]
        num, _, slug = name.partition("_")
        terminalreporter.write_line(f"criterion {int(num):2d} {slug.replace('_', ' '):<40} {outcome}")
