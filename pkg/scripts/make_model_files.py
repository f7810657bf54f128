#!/usr/bin/env python3
"""Regenerate the shipped model files under models/.

Every named model ships twice: the named form the builders consume, and an
explicit-matrix twin with [re, im] complex entries and per-jump rates. The
CLI test suite asserts both parse to the same generator, so rerun this
script whenever a builder convention changes.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from lindscope import models
from lindscope.cli import to_json

OUT = Path(__file__).resolve().parent.parent / "models"


def cmatrix(m) -> list:
    m = np.asarray(m, dtype=complex)
    return [[[float(z.real), float(z.imag)] for z in row] for row in m]


def named(kind: str, **params) -> dict:
    return {"model": {"type": kind, **params}}


def main() -> None:
    OUT.mkdir(exist_ok=True)
    zeros2 = np.zeros((2, 2))
    sz = models.pauli("z")
    low = models.lowering()

    files: dict[str, dict] = {}

    files["dephasing"] = named("dephasing", gamma_z=1.0)
    files["dephasing_explicit"] = {
        "dim": 2,
        "hamiltonian": cmatrix(zeros2),
        "jumps": [{"rate": 1.0, "matrix": cmatrix(sz)}],
        "label": "dephasing(gamma_z=1) explicit",
    }

    files["driven_dephasing"] = named("driven_dephasing", gamma_z=1.0, omega=0.1)
    files["driven_dephasing_explicit"] = {
        "dim": 2,
        "hamiltonian": cmatrix(0.5 * 0.1 * models.pauli("x")),
        "jumps": [{"rate": 1.0, "matrix": cmatrix(sz)}],
        "label": "driven_dephasing(gamma_z=1, omega=0.1) explicit",
    }

    files["relaxation"] = named("relaxation", gamma_minus=1.0)
    files["relaxation_explicit"] = {
        "dim": 2,
        "hamiltonian": cmatrix(zeros2),
        "jumps": [{"rate": 1.0, "matrix": cmatrix(low)}],
        "label": "relaxation(gamma_minus=1) explicit",
    }

    files["dephasing_relaxation"] = named(
        "dephasing_relaxation", gamma_z=1.0, gamma_minus=1.0
    )
    files["dephasing_relaxation_explicit"] = {
        "dim": 2,
        "hamiltonian": cmatrix(zeros2),
        "jumps": [
            {"rate": 1.0, "matrix": cmatrix(sz)},
            {"rate": 1.0, "matrix": cmatrix(low)},
        ],
        "label": "dephasing_relaxation(gamma_z=1, gamma_minus=1) explicit",
    }

    files["pauli_channel"] = named("pauli_channel", gamma_x=1.0, gamma_y=2.0, gamma_z=3.0)
    files["pauli_channel_explicit"] = {
        "dim": 2,
        "hamiltonian": cmatrix(zeros2),
        "jumps": [
            {"rate": 1.0, "matrix": cmatrix(models.pauli("x"))},
            {"rate": 2.0, "matrix": cmatrix(models.pauli("y"))},
            {"rate": 3.0, "matrix": cmatrix(sz)},
        ],
        "label": "pauli_channel(gamma_x=1, gamma_y=2, gamma_z=3) explicit",
    }

    files["multi_qubit_dephasing"] = named(
        "multi_qubit_dephasing", k=2, gamma_1=0.1, gamma_2=0.2
    )
    files["multi_qubit_dephasing_explicit"] = {
        "dim": 4,
        "hamiltonian": cmatrix(np.zeros((4, 4))),
        "jumps": [
            {"rate": 0.1, "matrix": cmatrix(models.tensor_site(sz, 0, 2))},
            {"rate": 0.2, "matrix": cmatrix(models.tensor_site(sz, 1, 2))},
        ],
        "label": "multi_qubit_dephasing(K=2) explicit",
    }

    files["hamiltonian_only"] = named("hamiltonian_only", omega=1.0)
    files["hamiltonian_only_explicit"] = {
        "dim": 2,
        "hamiltonian": cmatrix(0.5 * sz),
        "jumps": [],
        "label": "hamiltonian_only(omega=1) explicit",
    }

    files["jaynes_cummings"] = named(
        "jaynes_cummings", omega_a=1.0, omega_c=1.0, g=0.1, n_max=3
    )
    files["jaynes_cummings_explicit"] = {
        "dim": 8,
        "hamiltonian": cmatrix(models.jaynes_cummings(1.0, 1.0, 0.1, 3).hamiltonian),
        "jumps": [],
        "label": "jaynes_cummings(omega_a=1, omega_c=1, g=0.1, n_max=3) explicit",
    }

    for stem, payload in sorted(files.items()):
        path = OUT / f"{stem}.json"
        path.write_text(to_json(payload), encoding="utf-8")
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
