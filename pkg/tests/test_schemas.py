from fractions import Fraction

import jsonschema
import pytest

from pseudoalg import PseudoAlgebra, check
from pseudoalg.annihilation import CurrentTable, compare, window_jacobi
from pseudoalg.catalog import get_family, verify_all
from pseudoalg.cli import check_report_json
from pseudoalg.lambda_form import to_lambda
from pseudoalg.schemas import REPORT_KINDS, schema_for, validate
from pseudoalg.solver import cohomology
from pseudoalg.tensor import ALPHA

VIRASORO = PseudoAlgebra(1, {(0, 0): {0: ALPHA}}, name="virasoro")
SV = {"lambda1": Fraction(1, 2), "kappa1": 0, "a": 0, "w01": -1}


def reports():
    yield check_report_json(VIRASORO, check(VIRASORO), "lie", True)
    yield cohomology("lie", -5, 0, 8).to_json()
    yield CurrentTable(VIRASORO).to_json((-1, 1))
    yield compare("mtype-B", SV, Fraction(1, 2), (-1, 1)).to_json()
    yield window_jacobi(VIRASORO, 0, (-1, 1)).to_json()
    yield to_lambda(VIRASORO).to_json()
    yield {"kind": "catalog-list", "families": [get_family("tsv").summary()]}
    yield verify_all(draws=1, seed=1).to_json()


@pytest.mark.parametrize("report", list(reports()), ids=lambda r: r["kind"])
def test_reports_validate(report):
    validate(report)


def test_every_kind_has_a_schema():
    for kind in REPORT_KINDS:
        assert schema_for(kind)["type"] == "object"


def test_invalid_report_is_rejected():
    bad = cohomology("lie", -5, 0, 8).to_json()
    bad["h2_dim"] = "one"
    with pytest.raises(jsonschema.ValidationError):
        validate(bad)
    with pytest.raises(KeyError):
        validate({"kind": "nope"})
