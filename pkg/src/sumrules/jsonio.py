"""JSON codecs for every input and report format.

Scalar encoding is type-driven and lossless for the exact backend:

* ``int``                     -> JSON int
* ``Fraction``                -> string ``"p/q"``
* ``GaussianRational``        -> pair of strings ``["p/q", "r/s"]``
* ``float``                   -> JSON float
* ``complex``                 -> pair of numbers ``[re, im]``

The ``exact`` backend refuses floating-point content; the ``approx`` backend
converts everything to doubles on load.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .errors import SpecFormatError
from .histories import GroupElement, HistorySpace, SubsetMask
from .measures import (Measure, PolynomialMeasure, QuantumMeasure,
                       TableMeasure)
from .polarization import Decomposition, SymmetricForm
from .scalars import GaussianRational, Scalar, is_exact, to_complex
from .slits import SlitScenario, SumRuleReport

BACKENDS = ("exact", "approx")


def scalar_to_json(x: Scalar) -> Any:
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, GaussianRational):
        return [str(x.re), str(x.im)]
    if isinstance(x, float):
        return x
    if isinstance(x, complex):
        return [x.real, x.imag]
    raise TypeError(f"cannot serialize scalar of type {type(x)!r}")


def scalar_from_json(node: Any, where: str = "scalar") -> Scalar:
    if isinstance(node, bool):
        raise SpecFormatError(f"{where}: booleans are not scalars")
    if isinstance(node, int):
        return node
    if isinstance(node, float):
        return node
    if isinstance(node, str):
        try:
            return Fraction(node)
        except (ValueError, ZeroDivisionError) as exc:
            raise SpecFormatError(f"{where}: bad rational {node!r}") from exc
    if isinstance(node, list) and len(node) == 2:
        a, b = node
        if isinstance(a, str) and isinstance(b, str):
            try:
                return GaussianRational._make(Fraction(a), Fraction(b))
            except (ValueError, ZeroDivisionError) as exc:
                raise SpecFormatError(
                    f"{where}: bad exact complex {node!r}") from exc
        if isinstance(a, (int, float)) and isinstance(b, (int, float)) \
                and not isinstance(a, bool) and not isinstance(b, bool):
            return complex(a, b)
    raise SpecFormatError(f"{where}: unrecognized scalar {node!r}")


def coerce_backend(x: Scalar, backend: str, where: str = "scalar") -> Scalar:
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if backend == "exact":
        if not is_exact(x):
            raise SpecFormatError(
                f"{where}: the exact backend does not accept "
                f"floating-point values ({x!r})")
        return x
    if isinstance(x, complex):
        return x
    if isinstance(x, GaussianRational):
        return to_complex(x)
    return float(x)


def _load_scalar(node: Any, backend: str, where: str) -> Scalar:
    return coerce_backend(scalar_from_json(node, where), backend, where)


def element_to_json(g: GroupElement) -> dict:
    return {"coeffs": [scalar_to_json(c) for c in g.coeffs]}


def element_from_json(node: Any, space: HistorySpace,
                      backend: str = "exact",
                      where: str = "element") -> GroupElement:
    if isinstance(node, dict):
        coeffs = node.get("coeffs")
    else:
        coeffs = node
    if not isinstance(coeffs, list):
        raise SpecFormatError(f"{where}: expected a coefficient list")
    if len(coeffs) != space.size:
        raise SpecFormatError(
            f"{where}: expected {space.size} coefficients, got {len(coeffs)}")
    return space.element([
        _load_scalar(c, backend, f"{where}.coeffs[{i}]")
        for i, c in enumerate(coeffs)])


def args_from_json(obj: Any, space: HistorySpace,
                   backend: str = "exact") -> list[GroupElement]:
    if isinstance(obj, dict):
        entries = obj.get("args")
    else:
        entries = obj
    if not isinstance(entries, list) or not entries:
        raise SpecFormatError("args file needs a non-empty \"args\" list")
    return [element_from_json(e, space, backend, where=f"args[{i}]")
            for i, e in enumerate(entries)]


def subset_to_json(mask: SubsetMask) -> list[str]:
    return sorted(mask.label_list())


def subset_from_json(node: Any, space: HistorySpace) -> SubsetMask:
    if not isinstance(node, list):
        raise SpecFormatError("subset: expected a list of labels")
    return space.subset(node)


def measure_to_json(mu: Measure) -> dict:
    if isinstance(mu, PolynomialMeasure):
        return {
            "variant": "polynomial",
            "m": mu.space.size,
            "terms": [
                {"monomial": list(exps), "coeff": scalar_to_json(coeff)}
                for exps, coeff in sorted(mu.terms.items())
            ],
        }
    if isinstance(mu, QuantumMeasure):
        return {
            "variant": "quantum",
            "m": mu.space.size,
            "amplitudes": [scalar_to_json(z) for z in mu.amplitudes],
        }
    if isinstance(mu, TableMeasure):
        return {
            "variant": "table",
            "m": mu.space.size,
            "table": [
                {"point": [scalar_to_json(c) for c in point],
                 "value": scalar_to_json(value)}
                for point, value in sorted(
                    mu.values.items(), key=lambda kv: repr(kv[0]))
            ],
        }
    raise TypeError(f"cannot serialize measure of type {type(mu)!r}")


def measure_from_json(obj: Any, backend: str = "exact") -> Measure:
    if not isinstance(obj, dict):
        raise SpecFormatError("measure: expected an object")
    variant = obj.get("variant")
    m = obj.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise SpecFormatError("measure: \"m\" must be a positive integer")
    space = HistorySpace.of_size(m)
    if variant == "polynomial":
        terms_node = obj.get("terms")
        if not isinstance(terms_node, list):
            raise SpecFormatError("measure: polynomial needs a \"terms\" list")
        terms = {}
        for i, t in enumerate(terms_node):
            where = f"terms[{i}]"
            if not isinstance(t, dict):
                raise SpecFormatError(f"{where}: expected an object")
            mono = t.get("monomial")
            if (not isinstance(mono, list) or len(mono) != m or
                    any(not isinstance(e, int) or isinstance(e, bool) or e < 0
                        for e in mono)):
                raise SpecFormatError(
                    f"{where}: \"monomial\" must list {m} exponents")
            coeff = _load_scalar(t.get("coeff"), backend, f"{where}.coeff")
            key = tuple(mono)
            terms[key] = terms.get(key, 0) + coeff
        return PolynomialMeasure(space, terms)
    if variant == "quantum":
        amps_node = obj.get("amplitudes")
        if not isinstance(amps_node, list) or len(amps_node) != m:
            raise SpecFormatError(
                f"measure: quantum needs {m} \"amplitudes\"")
        amps = [_load_scalar(z, backend, f"amplitudes[{i}]")
                for i, z in enumerate(amps_node)]
        return QuantumMeasure(space, amps)
    if variant == "table":
        table_node = obj.get("table")
        if not isinstance(table_node, list):
            raise SpecFormatError("measure: table needs a \"table\" list")
        values = {}
        for i, row in enumerate(table_node):
            where = f"table[{i}]"
            if not isinstance(row, dict):
                raise SpecFormatError(f"{where}: expected an object")
            point = row.get("point")
            if not isinstance(point, list) or len(point) != m:
                raise SpecFormatError(
                    f"{where}: \"point\" must list {m} coefficients")
            key = tuple(_load_scalar(c, backend, f"{where}.point[{j}]")
                        for j, c in enumerate(point))
            values[key] = _load_scalar(
                row.get("value"), backend, f"{where}.value")
        return TableMeasure(space, values)
    raise SpecFormatError(f"measure: unknown variant {variant!r}")


def form_to_json(phi: SymmetricForm) -> dict:
    return {
        "order": phi.order,
        "table": [
            {"idx": list(idx), "value": scalar_to_json(value)}
            for idx, value in sorted(phi.table.data.items())
        ],
    }


def form_from_json(obj: Any, space: HistorySpace,
                   backend: str = "exact") -> SymmetricForm:
    if not isinstance(obj, dict):
        raise SpecFormatError("form: expected an object")
    order = obj.get("order")
    if not isinstance(order, int) or isinstance(order, bool) or order < 1:
        raise SpecFormatError("form: \"order\" must be a positive integer")
    rows = obj.get("table")
    if not isinstance(rows, list):
        raise SpecFormatError("form: expected a \"table\" list")
    table = {}
    for i, row in enumerate(rows):
        where = f"table[{i}]"
        if not isinstance(row, dict) or not isinstance(row.get("idx"), list):
            raise SpecFormatError(f"{where}: expected idx/value object")
        idx = tuple(row["idx"])
        table[idx] = _load_scalar(row.get("value"), backend, f"{where}.value")
    return SymmetricForm.from_table(space, order, table)


def decomposition_to_json(dec: Decomposition) -> dict:
    return {
        "m": dec.space.size,
        "order": dec.order,
        "components": [form_to_json(phi) for phi in dec.components],
    }


def decomposition_from_json(obj: Any, backend: str = "exact") -> Decomposition:
    if not isinstance(obj, dict) or not isinstance(obj.get("components"), list):
        raise SpecFormatError("decomposition: expected a \"components\" list")
    m = obj.get("m")
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise SpecFormatError("decomposition: \"m\" must be a positive integer")
    space = HistorySpace.of_size(m)
    components = [form_from_json(c, space, backend)
                  for c in obj["components"]]
    return Decomposition(space, tuple(components))


def scenario_to_json(s: SlitScenario) -> dict:
    return {
        "source": list(s.source),
        "slits": [list(p) for p in s.slits],
        "detector": list(s.detector),
        "wavenumber": s.wavenumber,
        "amplitude_model": s.amplitude_model,
    }


def _point_from_json(node: Any, where: str) -> tuple[float, float]:
    if (not isinstance(node, list) or len(node) != 2 or
            any(isinstance(c, bool) or not isinstance(c, (int, float))
                for c in node)):
        raise SpecFormatError(f"{where}: expected [x, y]")
    return float(node[0]), float(node[1])


def scenario_from_json(obj: Any) -> SlitScenario:
    if not isinstance(obj, dict):
        raise SpecFormatError("scenario: expected an object")
    slits_node = obj.get("slits")
    if not isinstance(slits_node, list) or not slits_node:
        raise SpecFormatError("scenario: expected a non-empty \"slits\" list")
    wavenumber = obj.get("wavenumber")
    if isinstance(wavenumber, bool) or not isinstance(wavenumber, (int, float)):
        raise SpecFormatError("scenario: \"wavenumber\" must be a number")
    try:
        return SlitScenario(
            source=_point_from_json(obj.get("source"), "scenario.source"),
            slits=tuple(_point_from_json(p, f"scenario.slits[{i}]")
                        for i, p in enumerate(slits_node)),
            detector=_point_from_json(obj.get("detector"), "scenario.detector"),
            wavenumber=float(wavenumber),
            amplitude_model=obj.get("amplitude_model", "phase-sum"),
        )
    except ValueError as exc:
        raise SpecFormatError(f"scenario: {exc}") from exc


def sum_rule_report_to_json(report: SumRuleReport) -> dict:
    def table(mapping):
        return [
            {"slits": list(key), "value": scalar_to_json(value)}
            for key, value in sorted(mapping.items())
        ]

    verdicts = report.verdicts
    return {
        "slit_count": report.slit_count,
        "tol": report.tol,
        "probabilities": table(report.probabilities),
        "interference": {
            "pairs": table(report.pairwise),
            "triples": table(report.triples),
            "quadruples": table(report.quadruples),
        },
        "max_abs": {
            "pairs": report.max_abs_pairwise,
            "triples": report.max_abs_triples,
            "quadruples": report.max_abs_quadruples,
        },
        "verdicts": verdicts,
    }


def dump_json_bytes(obj: Any) -> bytes:
    return (json.dumps(obj, sort_keys=True, indent=2) + "\n").encode("utf-8")


def load_json_file(path: str) -> Any:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except FileNotFoundError as exc:
        raise SpecFormatError(f"{path}: file not found") from exc
    except json.JSONDecodeError as exc:
        raise SpecFormatError(f"{path}: invalid JSON ({exc})") from exc
