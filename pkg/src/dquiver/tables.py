"""
Sampling check of the slice function classification: constant functions
take one value over random slice points, image functions one value over the
image of eta, and every quiver function differs from its star rank partner
by one integer.
"""

import logging
import random

from dataclasses import dataclass, field as dc_field
from typing import Dict, List, Optional, Sequence, Set

from dquiver.const import DEFAULT_SAMPLES, DEFAULT_SEED
from dquiver.dataclass.quiver import DimVector
from dquiver.field import QQ, Field, field_to_json
from dquiver.slice import (CONSTANT, IMAGE, L, U, FunctionClass, SliceFunction, SliceParams, all_slice_functions,
                           classification, column_labels, minimum_values, random_slice_point,
                           random_star_representation, slice_values, star_point)
from dquiver.star import build_star


log = logging.getLogger(__name__)


OK = 'ok'
CONTRADICTION = 'contradiction'


@dataclass
class TableRow:

    index: int
    function: SliceFunction
    fclass: FunctionClass
    observed: Set[int] = dc_field(default_factory=set)
    expected: Optional[int] = None
    samples: int = 0

    @property
    def status(self) -> str:
        if len(self.observed) != 1:
            return CONTRADICTION
        if self.expected is not None and self.observed != {self.expected}:
            return CONTRADICTION
        return OK

    @property
    def offset(self) -> Optional[int]:
        """The constant value (offset against the partner for quiver functions)."""
        return next(iter(self.observed)) if len(self.observed) == 1 else None

    def to_json(self) -> dict:
        return {
            'index': self.index,
            'function': str(self.function),
            'class': self.fclass.kind,
            'partner': None if self.fclass.partner is None else str(self.fclass.partner),
            'offset': self.offset,
            'observed': sorted(self.observed),
            'samples': self.samples,
            'status': self.status,
        }


@dataclass
class TableSection:

    dim_star: DimVector
    rows: List[TableRow]

    @property
    def ok(self) -> bool:
        return all(r.status == OK for r in self.rows)

    def to_json(self) -> dict:
        return {
            'dim_star': self.dim_star.as_dict(),
            'ok': self.ok,
            'rows': [r.to_json() for r in self.rows],
        }


@dataclass
class TableReport:

    n: int
    field: Field
    seed: int
    samples: int
    sections: List[TableSection]

    @property
    def ok(self) -> bool:
        return all(s.ok for s in self.sections)

    def contradictions(self) -> List[str]:
        return [
            f'{r.function} at d*={s.dim_star}: observed {sorted(r.observed)}'
            for s in self.sections for r in s.rows if r.status != OK
        ]

    def to_json(self) -> dict:
        return {
            'n': self.n,
            'field': field_to_json(self.field),
            'seed': self.seed,
            'samples': self.samples,
            'ok': self.ok,
            'sections': [s.to_json() for s in self.sections],
        }

    def to_text(self) -> str:
        """Two grids in the layout of the classification tables, one for U and L, one for B."""

        labels = column_labels(self.n)
        table = classification(self.n)
        bad = {r.function for s in self.sections for r in s.rows if r.status != OK}

        def cell(fn: SliceFunction) -> str:
            return str(table[fn]) + ('!' if fn in bad else '')

        head = ['v'] + [str(c) for c in labels]
        ul = [head]
        for kind in (U, L):
            ul.append([kind] + [cell(SliceFunction(kind, c)) for c in labels])

        b = [['v \\ w'] + [str(c) for c in labels[1:]]]
        for i, v in enumerate(labels[:-1]):
            b.append([str(v)] + [''] * i + [cell(SliceFunction('B', v, w)) for w in labels[i + 1:]])

        lines = [f'n={self.n} field={self.field} seed={self.seed} samples={self.samples}']
        for s in self.sections:
            lines.append(f"d*={s.dim_star}: {'ok' if s.ok else 'CONTRADICTION'}")
        lines += ['', _grid(ul), '', _grid(b)]

        return '\n'.join(lines)


def _grid(rows: List[List[str]]) -> str:
    widths = [max(len(r[k]) for r in rows if k < len(r)) for k in range(len(rows[0]))]
    return '\n'.join(' | '.join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


def random_dims(n: int, rng: random.Random, count: int = 3, max_entry: int = 3) -> List[DimVector]:
    star = build_star(n).quiver
    return [
        DimVector.of(star, {z: rng.randint(0, max_entry) for z in star.vertices})
        for _ in range(count)
    ]


def _verify_section(params: SliceParams, samples: int, rng: random.Random, field: Field) -> TableSection:

    fns = all_slice_functions(params.n)
    table = classification(params.n)
    minimum = minimum_values(params, field)

    rows = [TableRow(k, fn, table[fn]) for k, fn in enumerate(fns)]
    for row in rows:
        if row.fclass.kind == IMAGE:
            row.expected = minimum[row.function]

    for _ in range(samples):

        on_slice = slice_values(random_slice_point(params, rng, field))

        p, partners = star_point(random_star_representation(params, rng, field))
        on_image = slice_values(p)

        for row, s_value, i_value in zip(rows, on_slice, on_image):
            if row.fclass.kind == CONSTANT:
                row.observed.add(s_value)
            elif row.fclass.kind == IMAGE:
                row.observed.add(i_value)
            else:
                row.observed.add(i_value - partners[row.fclass.partner])
            row.samples += 1

    section = TableSection(params.dim_star, rows)
    log.debug(f'd*={params.dim_star}: {sum(r.status == OK for r in rows)}/{len(rows)} rows consistent')
    return section


def verify_tables(n: int, dims: Optional[Sequence[DimVector]] = None, samples: int = DEFAULT_SAMPLES,
                  seed: int = DEFAULT_SEED, field: Field = QQ) -> TableReport:
    """
    Check the classification of every slice function of Q*(n) against
    random samples.

    :param n: Rank of the star quiver.
    :param dims: Dimension vectors to sample at; three random ones with
        entries at most 3 when omitted.
    :param samples: Samples per dimension vector.
    :param seed: Seed of every random draw.
    :param field: Field to sample over.
    """

    rng = random.Random(seed)
    dims = random_dims(n, rng) if dims is None else list(dims)

    sections = [_verify_section(SliceParams(n, d), samples, rng, field) for d in dims]
    report = TableReport(n, field, seed, samples, sections)

    for line in report.contradictions():
        log.debug(f'contradiction: {line}')

    return report


def partner_table(n: int) -> Dict[str, str]:
    """Class marks of every slice function, keyed by its text form."""
    return {str(fn): str(cls) for fn, cls in classification(n).items()}
