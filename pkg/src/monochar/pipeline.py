"""Staged computation from generators to the Cartan matrix."""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .bichar import (BicharacterMatrix, SchutzData, TestElements, bicharacter_matrix,
                     compute_c_m, schutz_data)
from .chartable import (CartanMatrix, MonoidCharTable, cartan_matrix, character_table,
                        simple_dimensions)
from .enumeration import MonoidTable, enumerate_monoid
from .errors import ContractViolation
from .green import GreenStructure, green_structure
from .groupchar import group_character_table
from .parallel import parallel_map
from .radical import lclass_radical_data

STAGES = ("enumerate", "green", "schutz", "c_m", "bichar", "radical", "chartable", "cartan")


class StageError(ContractViolation):
    def __init__(self, stage: str, error: Exception):
        self.stage = stage
        self.error = error
        super().__init__(f"stage {stage}: {type(error).__name__}: {error}")


@dataclass
class Analysis:
    table: MonoidTable | None = None
    structure: GreenStructure | None = None
    sdata: SchutzData | None = None
    cm: TestElements | None = None
    bichar: BicharacterMatrix | None = None
    radicals: dict | None = None  # regular J id -> LClassRadical
    chartable: MonoidCharTable | None = None
    dims: list | None = None
    cartan: CartanMatrix | None = None
    timings: dict = field(default_factory=dict)
    sizes: dict = field(default_factory=dict)


def _radical_job(ctx, item):
    table, structure = ctx
    return lclass_radical_data(table, structure, item)


def analyze(generators, until: str = "cartan", jobs: int = 1) -> Analysis:
    """Run the stages in order up to and including ``until``.

    Contract violations are re-raised as :class:`StageError` naming the stage.
    """
    last = STAGES.index(until)
    out = Analysis()

    def run(name, func):
        t0 = time.perf_counter()
        try:
            func()
        except ContractViolation as exc:
            raise StageError(name, exc) from exc
        out.timings[name] = time.perf_counter() - t0

    def s_enumerate():
        out.table = enumerate_monoid(generators)
        out.sizes["enumerate"] = len(out.table)

    def s_green():
        out.structure = green_structure(out.table)
        out.sizes["green"] = len(out.structure.jclasses)

    def s_schutz():
        out.sdata = schutz_data(out.table, out.structure)
        biggest = 0
        for jc in out.structure.regular_jclasses:
            e = out.sdata.regular_idempotent(jc.id)
            G = out.sdata.lgroup(out.structure.l_of[e])
            group_character_table(G)
            biggest = max(biggest, G.order)
        out.sizes["schutz"] = biggest

    def s_c_m():
        out.cm = compute_c_m(out.table, out.structure, out.sdata)
        out.sizes["c_m"] = len(out.cm)

    def s_bichar():
        out.bichar = bicharacter_matrix(out.table, out.structure, out.sdata, out.cm, jobs)
        out.sizes["bichar"] = len(out.cm) ** 2

    def s_radical():
        items = sorted(out.cm.idempotent.items())
        ls = [out.structure.l_of[e] for _, e in items]
        data = parallel_map(_radical_job, ls, jobs, context=(out.table, out.structure))
        out.radicals = {j: d for (j, _), d in zip(items, data)}
        out.sizes["radical"] = max((len(d.basis_elements) for d in data), default=0)

    def s_chartable():
        out.chartable = character_table(out.table, out.structure, out.sdata, out.cm,
                                        out.radicals, jobs)
        out.dims = simple_dimensions(out.chartable)
        out.sizes["chartable"] = len(out.chartable)

    def s_cartan():
        out.cartan = cartan_matrix(out.chartable, out.bichar)
        out.sizes["cartan"] = len(out.cartan)

    steps = [s_enumerate, s_green, s_schutz, s_c_m, s_bichar, s_radical, s_chartable, s_cartan]
    for name, step in zip(STAGES[: last + 1], steps):
        run(name, step)
    return out
