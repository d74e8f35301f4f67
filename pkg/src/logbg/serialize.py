"""Descriptor parsing and record serialization for the CLI.

Pair descriptors are JSON; unknown keys are errors, not warnings.
Rationals serialize as canonical "p/q" strings ("p" when the
denominator is one) and round-trip losslessly.
"""

from __future__ import annotations

import json
from dataclasses import asdict
from fractions import Fraction

from .bg import BGReport
from .chow import CycleClass
from .logchern import LogPair
from .models import AmbientModel, hirzebruch, hypersurface, projective_space
from .search import EqualityCase, SearchConfig

TOOL_VERSION = "0.1.0"


class InputError(ValueError):
    """Malformed descriptor document."""


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    return Fraction(s)


_GENERATORS = {
    "projective_space": ("H",),
    "hypersurface": ("h",),
    "hirzebruch": ("C0", "f"),
}


def cycle_to_dict(cls: CycleClass) -> dict:
    names = _GENERATORS[cls.model.kind] if cls.grade == 1 else \
        cls.model.basis_names(cls.grade)
    return {name: format_rational(c) for name, c in zip(names, cls.coeffs)}


def cycle_display(cls: CycleClass) -> str:
    """Human form of a divisor class; names the C_inf alias on F_m."""
    model = cls.model
    if model.kind == "hirzebruch" and cls.grade == 1:
        a, b = cls.coeffs
        text = f"{format_rational(a)}*C0 + {format_rational(b)}*f"
        if (a, b) == (1, model.m):
            text += " (= Cinf)"
        return text
    return str(cls)


def _check_keys(obj: dict, allowed: set[str], where: str) -> None:
    for key in obj:
        if key not in allowed:
            raise InputError(f"unknown key {key!r} in {where}")


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise InputError(f"missing key {key!r} in {where}")
    return obj[key]


def _int_field(obj: dict, key: str, where: str) -> int:
    value = _require(obj, key, where)
    if not isinstance(value, int) or isinstance(value, bool):
        raise InputError(f"key {key!r} in {where} must be an integer")
    return value


def parse_ambient(obj) -> AmbientModel:
    if not isinstance(obj, dict):
        raise InputError("'ambient' must be an object")
    kind = _require(obj, "kind", "ambient")
    if kind == "projective_space":
        _check_keys(obj, {"kind", "n"}, "ambient")
        return projective_space(_int_field(obj, "n", "ambient"))
    if kind == "hypersurface":
        _check_keys(obj, {"kind", "n", "q"}, "ambient")
        return hypersurface(_int_field(obj, "n", "ambient"),
                            _int_field(obj, "q", "ambient"))
    if kind == "hirzebruch":
        _check_keys(obj, {"kind", "m"}, "ambient")
        return hirzebruch(_int_field(obj, "m", "ambient"))
    raise InputError(f"unknown ambient kind {kind!r}")


def parse_divisor(obj, model: AmbientModel, index: int) -> tuple[str, CycleClass]:
    where = f"divisors[{index}]"
    if not isinstance(obj, dict):
        raise InputError(f"{where} must be an object")
    _check_keys(obj, {"label", "class"}, where)
    label = _require(obj, "label", where)
    if not isinstance(label, str):
        raise InputError(f"key 'label' in {where} must be a string")
    cls = _require(obj, "class", where)
    if not isinstance(cls, dict):
        raise InputError(f"key 'class' in {where} must be an object")
    generators = _GENERATORS[model.kind]
    _check_keys(cls, set(generators), f"{where}.class")
    coeffs = []
    for gen in generators:
        c = cls.get(gen, 0)
        if not isinstance(c, int) or isinstance(c, bool):
            raise InputError(
                f"coefficient {gen!r} in {where}.class must be an integer")
        coeffs.append(c)
    return label, model.divisor(*coeffs)


def parse_pair(obj, where: str = "document") -> LogPair:
    if not isinstance(obj, dict):
        raise InputError(f"{where} must be an object")
    _check_keys(obj, {"ambient", "divisors"}, where)
    model = parse_ambient(_require(obj, "ambient", where))
    divisors = _require(obj, "divisors", where)
    if not isinstance(divisors, list):
        raise InputError(f"key 'divisors' in {where} must be a list")
    components = tuple(parse_divisor(d, model, i)
                       for i, d in enumerate(divisors))
    return LogPair(model, components)


def parse_document(text: str) -> list[LogPair]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from exc
    if isinstance(doc, dict) and "pairs" in doc:
        _check_keys(doc, {"pairs"}, "document")
        if not isinstance(doc["pairs"], list):
            raise InputError("key 'pairs' must be a list")
        return [parse_pair(p, f"pairs[{i}]")
                for i, p in enumerate(doc["pairs"])]
    return [parse_pair(doc)]


# -- output records --------------------------------------------------------


def pair_echo(pair: LogPair) -> dict:
    model = pair.model
    if model.kind == "projective_space":
        ambient = {"kind": model.kind, "n": model.n}
    elif model.kind == "hypersurface":
        ambient = {"kind": model.kind, "n": model.n, "q": model.q}
    else:
        ambient = {"kind": model.kind, "m": model.m}
    return {
        "ambient": ambient,
        "divisors": [{"label": label,
                      "class": cycle_to_dict(cls),
                      "display": cycle_display(cls)}
                     for label, cls in pair.components],
    }


def report_fields(report: BGReport) -> dict:
    return {
        "rank": report.rank,
        "c1_sq": format_rational(report.c1_sq),
        "c2_eval": format_rational(report.c2_eval),
        "discriminant": format_rational(report.discriminant),
        "equality_n": report.equality_n,
        "equality_n_plus_1": report.equality_n_plus_1,
        "minus_k_plus_d_nef": report.minus_k_plus_d_nef,
        "polarization": cycle_to_dict(report.polarization),
    }


def report_record(pair: LogPair, report: BGReport) -> dict:
    record = {"input": pair_echo(pair), "tool_version": TOOL_VERSION}
    record.update(report_fields(report))
    return record


def bounds_fields(config: SearchConfig) -> dict:
    fields = asdict(config)
    if config.family == "pn":
        fields.pop("q_min")
        fields.pop("q_max")
    return fields


def case_record(case: EqualityCase, config: SearchConfig) -> dict:
    record = {
        "family": case.family,
        "n": case.n,
        "q": case.q,
        "partition": list(case.partition),
        "modes": list(case.modes),
        "nef": case.nef,
        "bounds": bounds_fields(config),
        "tool_version": TOOL_VERSION,
    }
    record.update(report_fields(case.report))
    return record


def dump_record(record: dict) -> str:
    return json.dumps(record, sort_keys=True, separators=(",", ":"))
