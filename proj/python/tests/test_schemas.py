import json
from pathlib import Path

import pytest

import evalgebra as ev

jsonschema = pytest.importorskip("jsonschema")

SCHEMA = json.loads((Path(__file__).resolve().parents[2] / "schemas" / "evalg.schema.json").read_text())


def check(doc, name):
    jsonschema.validate(doc, {"$defs": SCHEMA["$defs"], "$ref": f"#/$defs/{name}"})


def cli(*args):
    code, out, err = ev.run_cli(*args)
    assert code in (0, 2), err
    return json.loads(out)


def test_certificates_match_schema():
    for pair, n in [("Z/Q", 5), ("Fq2/FracFq2", 4), ("Zq/LaurentZ64", 3), ("Zi/Qi", 3)]:
        cert = ev.build_certificate(pair, ev.ds_witness(pair, n)["points"], n)
        check(cert, "DensityCertificate")
        check(ev.verify_certificate(cert), "CertificateCheck")
    check(ev.hopf_density_certificate("N", "Z/Q", 3), "HopfCertificate")
    check(ev.hopf_density_certificate("P", "Fq3/FracFq3", 4, p=3), "HopfCertificate")


def test_reports_match_schema():
    check(ev.is_numerical_zz(["0", "1/2"]), "NumericalVerdict")
    check(ev.membership(ev.build_e([0, 1], 2)), "MembershipVerdict")
    check(ev.classify_pair("Z/Z"), "ClassificationReport")
    check(ev.classify_pair("Z/Q"), "ClassificationReport")
    check(ev.ds_witness("Zi/Qi", 2), "DSWitness")
    check(cli("density", "image", "--pair", "Zi/Zi", "--a", "[1,1]"), "FiniteImage")
    check(cli("density", "certify", "--pair", "Z/Z", "--trunc", "3", "--points", "[0,1,2]"), "CoefficientOutsideL")


def test_values_match_schema():
    check(ev.fpq_family(2, 1), "Poly")
    check(ev.gaussian_family(2), "Poly")
    check(ev.hopf_diagonal("N", 3), "MPoly")
    check(ev.ev_star({"terms": [{"point": "2", "coeff": "1/3"}]}, 4), "DividedPowerVector")
    check(ev.series_reverse({"kind": "pseries", "p": 2, "ring": "Frac(Fq(2))", "coeffs": ["q", "1"]}), "Series")
    for ring, text in [("Z", "-7"), ("Q", "3/4"), ("Fq(5)", "q^2+4"), ("Frac(Fq(3))", "1/(q+1)"), ("Zi", "2-i"),
                       ("Qi", "i/2"), ("Zq", "q-1"), ("LaurentZ(8)", "q^-2+3")]:
        check(ev.parse_element(text, ring), "Element")
    fn = cli("hopf", "ev-star", "--algebra", "N", "--weight", "3", "--input",
             json.dumps({"ring": "Q", "terms": [{"point": {"kind": "nottingham", "coeffs": ["1", "2"]}, "coeff": "1"}]}))
    check(fn, "DualFunctional")
