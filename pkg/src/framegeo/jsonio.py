"""JSON serialization for the library's value types.

Floats are written with Python's shortest round-trip representation, so a
dump/load cycle reproduces every array bit for bit.
"""

from __future__ import annotations

import json

import numpy as np

from .ellipsoids import Ellipsoid
from .frames import FrameSet, Subspace
from .majorization import NormProfile
from .polytopes import Polytope


def frame_to_dict(frame: FrameSet) -> dict:
    return {"n": frame.n, "k": frame.k, "vectors": frame.vectors.tolist()}


def frame_from_dict(data: dict) -> FrameSet:
    return FrameSet(n=int(data["n"]), k=int(data["k"]),
                    vectors=np.array(data["vectors"], dtype=float))


def subspace_to_dict(subspace: Subspace) -> dict:
    return {"n": subspace.n, "k": subspace.k, "basis": subspace.basis.tolist()}


def subspace_from_dict(data: dict) -> Subspace:
    return Subspace(n=int(data["n"]), k=int(data["k"]),
                    basis=np.array(data["basis"], dtype=float))


def profile_to_dict(profile: NormProfile) -> dict:
    return {"n": profile.n, "k": profile.k, "c": profile.entries.tolist()}


def profile_from_dict(data: dict) -> NormProfile:
    profile = NormProfile(k=int(data["k"]), entries=np.array(data["c"], dtype=float))
    if "n" in data and int(data["n"]) != profile.n:
        raise ValueError(f"profile length {profile.n} does not match n={data['n']}")
    return profile


def ellipsoid_to_dict(e: Ellipsoid) -> dict:
    return {"k": e.k, "matrix": e.matrix.tolist()}


def ellipsoid_from_dict(data: dict) -> Ellipsoid:
    return Ellipsoid(k=int(data["k"]), matrix=np.array(data["matrix"], dtype=float))


def polytope_to_dict(p: Polytope) -> dict:
    out = {"k": p.k}
    if p.vrep is not None:
        out["vrep"] = p.vrep.tolist()
    if p.hrep is not None:
        out["hrep"] = p.hrep.tolist()
    return out


def polytope_from_dict(data: dict) -> Polytope:
    vrep = np.array(data["vrep"], dtype=float) if "vrep" in data else None
    hrep = np.array(data["hrep"], dtype=float) if "hrep" in data else None
    return Polytope(k=int(data["k"]), vrep=vrep, hrep=hrep)


def dump(data: dict, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(data, fh, indent=2)
        fh.write("\n")


def load(path) -> dict:
    with open(path, encoding="utf-8") as fh:
        return json.load(fh)
