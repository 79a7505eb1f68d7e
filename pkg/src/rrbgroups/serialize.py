"""JSON schemas for groups, structures, extensions, modules, and cochains.

Wherever a group or structure is expected, the value may be an inline object
or a string path to another JSON file, resolved relative to the referencing
file.  Group objects come in two forms:

    {"name": ..., "order": n, "table": [[int]]}
    {"name": ..., "degree": d, "generators": [[int]]}

Factor systems are flat row-major arrays over nondegenerate tuples only,
together with the shape list [|A|, |B|, |K|, |L|].
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Optional, Union

import numpy as np

from .extensions import Extension, validate_extension
from .groups import FiniteGroup, group_from_permutations, validate_group
from .modules import ActionQuadruple, FactorSystem, RRBModule
from .rrb import RRBGroup, RRBMorphism, validate_morphism, validate_rrb


class ParseError(ValueError):
    pass


def _load_json(path: Union[str, Path]) -> tuple:
    path = Path(path)
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh), path.parent
    except FileNotFoundError:
        raise ParseError(f"no such file: {path}")
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON in {path}: {exc}")


def _resolve(value, base: Optional[Path]):
    if isinstance(value, str):
        path = Path(value)
        if not path.is_absolute():
            path = (base or Path(".")) / path
        return _load_json(path)
    return value, base


def _require(obj: dict, key: str, where: str):
    if key not in obj:
        raise ParseError(f"{where}: missing key {key!r}")
    return obj[key]


def load_group(value, base: Optional[Path] = None) -> FiniteGroup:
    obj, base = _resolve(value, base)
    if not isinstance(obj, dict):
        raise ParseError("group payload must be an object")
    name = obj.get("name")
    if "table" in obj:
        table = obj["table"]
        if "order" in obj and len(table) != obj["order"]:
            raise ParseError(f"group {name or ''}: order does not match table size")
        return validate_group(table, name=name)
    if "generators" in obj:
        degree = _require(obj, "degree", "permutation group")
        return group_from_permutations(degree, obj["generators"], name=name)
    raise ParseError("group payload needs a 'table' or 'generators' key")


def group_to_json(G: FiniteGroup) -> dict:
    out = {"order": G.order, "table": G.table.tolist()}
    if G.name:
        out["name"] = G.name
    return out


def load_rrb(value, base: Optional[Path] = None) -> RRBGroup:
    obj, base = _resolve(value, base)
    if not isinstance(obj, dict):
        raise ParseError("structure payload must be an object")
    H = load_group(_require(obj, "H", "structure"), base)
    G = load_group(_require(obj, "G", "structure"), base)
    phi = _require(obj, "phi", "structure")
    R = _require(obj, "R", "structure")
    return validate_rrb(H, G, phi, R, name=obj.get("name"))


def rrb_to_json(rrb: RRBGroup) -> dict:
    out = {"H": group_to_json(rrb.H), "G": group_to_json(rrb.G),
           "phi": rrb.phi.tolist(), "R": rrb.R.tolist()}
    if rrb.name:
        out["name"] = rrb.name
    return out


def morphism_to_json(m: RRBMorphism) -> dict:
    return {"psi": m.psi.image.tolist(), "eta": m.eta.image.tolist()}


def load_extension(value, base: Optional[Path] = None) -> Extension:
    obj, base = _resolve(value, base)
    if not isinstance(obj, dict):
        raise ParseError("extension payload must be an object")
    kernel = load_rrb(_require(obj, "kernel", "extension"), base)
    total = load_rrb(_require(obj, "total", "extension"), base)
    quotient = load_rrb(_require(obj, "quotient", "extension"), base)
    incl_obj = _require(obj, "incl", "extension")
    proj_obj = _require(obj, "proj", "extension")
    incl = validate_morphism(kernel, total,
                             _require(incl_obj, "psi", "incl"),
                             _require(incl_obj, "eta", "incl"))
    proj = validate_morphism(total, quotient,
                             _require(proj_obj, "psi", "proj"),
                             _require(proj_obj, "eta", "proj"))
    return validate_extension(kernel, total, quotient, incl, proj)


def extension_to_json(ext: Extension) -> dict:
    return {"kernel": rrb_to_json(ext.kernel), "total": rrb_to_json(ext.total),
            "quotient": rrb_to_json(ext.quotient),
            "incl": morphism_to_json(ext.incl), "proj": morphism_to_json(ext.proj)}


def load_module(value, base: Optional[Path] = None) -> RRBModule:
    obj, base = _resolve(value, base)
    if not isinstance(obj, dict):
        raise ParseError("module payload must be an object")
    quotient = load_rrb(_require(obj, "quotient", "module"), base)
    kernel = load_rrb(_require(obj, "kernel", "module"), base)
    action = ActionQuadruple(_require(obj, "nu", "module"), _require(obj, "mu", "module"),
                             _require(obj, "sigma", "module"), _require(obj, "f", "module"))
    return RRBModule(quotient, kernel, action)


def module_to_json(module: RRBModule) -> dict:
    return {"quotient": rrb_to_json(module.quotient), "kernel": rrb_to_json(module.kernel),
            "nu": module.action.nu.tolist(), "mu": module.action.mu.tolist(),
            "sigma": module.action.sigma.tolist(), "f": module.action.f.tolist()}


def factor_system_to_json(fs: FactorSystem, nK: int, nL: int) -> dict:
    nA, nB = fs.shapes
    return {
        "shapes": [nA, nB, nK, nL],
        "tau1": [int(fs.tau1[a1, a2]) for a1 in range(1, nA) for a2 in range(1, nA)],
        "tau2": [int(fs.tau2[b1, b2]) for b1 in range(1, nB) for b2 in range(1, nB)],
        "rho": [int(fs.rho[a, b]) for a in range(1, nA) for b in range(1, nB)],
        "chi": [int(fs.chi[a]) for a in range(1, nA)],
    }


def load_factor_system(value, module: RRBModule, base: Optional[Path] = None) -> FactorSystem:
    obj, base = _resolve(value, base)
    nA, nB = module.A.order, module.B.order
    shapes = _require(obj, "shapes", "factor system")
    if list(shapes) != [nA, nB, module.K.order, module.L.order]:
        raise ParseError(f"factor system shapes {shapes} do not match the module")

    def unflatten(flat, rows, cols, where):
        flat = list(flat)
        if len(flat) != (rows - 1) * (cols - 1):
            raise ParseError(f"{where}: expected {(rows - 1) * (cols - 1)} entries")
        out = np.zeros((rows, cols), dtype=np.int64)
        it = iter(flat)
        for i in range(1, rows):
            for j in range(1, cols):
                out[i, j] = next(it)
        return out

    tau1 = unflatten(_require(obj, "tau1", "factor system"), nA, nA, "tau1")
    tau2 = unflatten(_require(obj, "tau2", "factor system"), nB, nB, "tau2")
    rho = unflatten(_require(obj, "rho", "factor system"), nA, nB, "rho")
    chi_flat = list(_require(obj, "chi", "factor system"))
    if len(chi_flat) != nA - 1:
        raise ParseError(f"chi: expected {nA - 1} entries")
    chi = np.zeros(nA, dtype=np.int64)
    chi[1:] = chi_flat
    return FactorSystem(tau1, tau2, rho, chi)


def one_cochain_to_json(kappa, nA: int, nB: int) -> dict:
    """Degree-one cochains use the same flat nondegenerate layout."""
    return {
        "shapes": [nA, nB],
        "kappa1": [int(kappa.kappa1[a]) for a in range(1, nA)],
        "kappa2": [int(kappa.kappa2[b]) for b in range(1, nB)],
    }


def load_one_cochain(value, module: RRBModule, base: Optional[Path] = None):
    from .modules import OneCochain

    obj, base = _resolve(value, base)
    nA, nB = module.A.order, module.B.order
    shapes = _require(obj, "shapes", "one-cochain")
    if list(shapes) != [nA, nB]:
        raise ParseError(f"one-cochain shapes {shapes} do not match the module")
    k1 = list(_require(obj, "kappa1", "one-cochain"))
    k2 = list(_require(obj, "kappa2", "one-cochain"))
    if len(k1) != nA - 1 or len(k2) != nB - 1:
        raise ParseError("one-cochain arrays have the wrong length")
    return OneCochain([0] + k1, [0] + k2)


def load_pair(value, quotient: RRBGroup, kernel: RRBGroup,
              base: Optional[Path] = None):
    """An automorphism pair {"psi": {"psi":[...], "eta":[...]}, "theta": {...}}."""
    from .wells import CompatiblePair

    obj, base = _resolve(value, base)
    psi_obj = _require(obj, "psi", "pair")
    theta_obj = _require(obj, "theta", "pair")
    psi = validate_morphism(quotient, quotient,
                            _require(psi_obj, "psi", "pair.psi"),
                            _require(psi_obj, "eta", "pair.psi"))
    theta = validate_morphism(kernel, kernel,
                              _require(theta_obj, "psi", "pair.theta"),
                              _require(theta_obj, "eta", "pair.theta"))
    return CompatiblePair(psi, theta)


def pair_to_json(pair) -> dict:
    return {"psi": morphism_to_json(pair.psi), "theta": morphism_to_json(pair.theta)}


def detect_payload(obj: dict) -> str:
    """Classify a JSON object as group / structure / module / extension."""
    if not isinstance(obj, dict):
        raise ParseError("payload must be a JSON object")
    if {"kernel", "total", "quotient"} <= set(obj):
        return "extension"
    if {"nu", "mu", "sigma", "f"} <= set(obj):
        return "module"
    if {"phi", "R"} <= set(obj):
        return "structure"
    if "table" in obj or "generators" in obj:
        return "group"
    raise ParseError("payload does not match any known schema")
