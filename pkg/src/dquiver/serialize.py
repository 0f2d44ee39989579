"""
JSON files read and written by the command line: quiver specs, representation
specs, matrices and dimension vector lists. Inputs are checked against JSON
schemas and errors point at the offending line where possible.
"""

import json
import logging
import os
import re

from dataclasses import dataclass
from typing import Any, List, Optional, Sequence

import jsonschema

from dquiver.const import FIELD_RE, FRACTION_RE
from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.dataclass.representation import Representation
from dquiver.error import SpecFileError
from dquiver.field import QQ, Field, field_to_json, parse_field
from dquiver.linalg import ExactMatrix


log = logging.getLogger(__name__)


ENTRY_SCHEMA = {
    'anyOf': [
        {'type': 'integer'},
        {'type': 'string', 'pattern': FRACTION_RE.pattern},
    ]
}

MATRIX_SCHEMA = {
    'type': 'array',
    'items': {'type': 'array', 'items': ENTRY_SCHEMA},
}

FIELD_SCHEMA = {
    'anyOf': [
        {'type': 'string', 'pattern': FIELD_RE.pattern},
        {
            'type': 'object',
            'properties': {'GF': {'type': 'integer', 'minimum': 2}},
            'required': ['GF'],
            'additionalProperties': False,
        },
    ]
}

DIM_SCHEMA = {
    'type': 'object',
    'additionalProperties': {'type': 'integer', 'minimum': 0},
}

QUIVER_SCHEMA = {
    'type': 'object',
    'properties': {
        'vertices': {'type': 'array', 'items': {'type': 'string'}, 'minItems': 1},
        'arrows': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {
                    'id': {'type': 'string'},
                    'tail': {'type': 'string'},
                    'head': {'type': 'string'},
                },
                'required': ['id', 'tail', 'head'],
                'additionalProperties': False,
            },
        },
        'dim': DIM_SCHEMA,
        'field': FIELD_SCHEMA,
    },
    'required': ['vertices', 'arrows'],
}

REP_SCHEMA = {
    'type': 'object',
    'properties': {
        'quiver': {'anyOf': [{'type': 'string'}, QUIVER_SCHEMA]},
        'mats': {'type': 'object', 'additionalProperties': MATRIX_SCHEMA},
    },
    'required': ['quiver', 'mats'],
}

DIMS_LIST_SCHEMA = {'type': 'array', 'items': DIM_SCHEMA, 'minItems': 1}


@dataclass(frozen=True)
class QuiverSpec:

    quiver: Quiver
    dim: Optional[DimVector]
    field: Field

    def require_dim(self, path: str = None) -> DimVector:
        if self.dim is None:
            raise SpecFileError("the quiver spec has no dimension vector", path)
        return self.dim


_DECODER = json.JSONDecoder()
_SEPARATORS = re.compile(r'[\s,]*')


def _array_item(text: str, at: int, index: int) -> int:
    """Offset of item `index` of the array opened at `at`."""

    pos = _SEPARATORS.match(text, at + 1).end()
    for _ in range(index):
        _, pos = _DECODER.raw_decode(text, pos)
        pos = _SEPARATORS.match(text, pos).end()
    return pos


def _line_of(text: str, pointer: Sequence[Any]) -> Optional[int]:
    """Best guess of the line holding the value at a JSON path."""

    offset = 0
    found = False
    for part in pointer:
        if isinstance(part, str):
            at = text.find(json.dumps(part), offset)
        else:
            at = text.find('[', offset)
            at = _array_item(text, at, part) if at >= 0 else at
        if at < 0:
            break
        offset, found = at, True

    return text.count('\n', 0, offset) + 1 if found else None


def load_json(path: str, schema: dict) -> Any:
    """
    Read and validate a JSON file.

    :raises SpecFileError: On unreadable, malformed or schema-invalid input.
    """

    try:
        with open(path, 'r', encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise SpecFileError(f"{path}: cannot read: {e.strerror}", path) from None

    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpecFileError(f"{path}:{e.lineno}:{e.colno}: {e.msg}", path, e.lineno) from None

    try:
        jsonschema.validate(instance=data, schema=schema)
    except jsonschema.ValidationError as e:
        where = '/' + '/'.join(map(str, e.absolute_path))
        line = _line_of(text, list(e.absolute_path))
        prefix = f'{path}:{line}' if line else path
        raise SpecFileError(f"{prefix}: {where}: {e.message}", path, line) from None

    log.debug(f'loaded {path}')
    return data


def parse_quiver_spec(data: dict, field: Optional[Field] = None, path: str = None) -> QuiverSpec:
    """
    Build the quiver, dimension vector and field of a validated spec; an
    explicit `field` takes precedence over the one named in the file.
    """

    quiver = Quiver.of(data['vertices'], [(a['id'], a['tail'], a['head']) for a in data['arrows']])

    dim = None
    if 'dim' in data:
        missing = set(quiver.vertices) - set(data['dim'])
        if missing:
            raise SpecFileError(f"{path}: no dimension given for {sorted(missing)}", path)
        dim = DimVector.of(quiver, data['dim'])

    if field is None:
        field = parse_field(data['field']) if 'field' in data else QQ

    return QuiverSpec(quiver, dim, field)


def read_quiver_spec(path: str, field: Optional[Field] = None) -> QuiverSpec:
    return parse_quiver_spec(load_json(path, QUIVER_SCHEMA), field, path)


def read_rep_spec(path: str, field: Optional[Field] = None) -> Representation:
    """
    A representation from a RepSpec file; the quiver is inline or a path
    relative to the file.
    """

    data = load_json(path, REP_SCHEMA)

    if isinstance(data['quiver'], str):
        spec = read_quiver_spec(os.path.join(os.path.dirname(path), data['quiver']), field)
    else:
        spec = parse_quiver_spec(data['quiver'], field, path)

    dim = spec.require_dim(path)
    return Representation.of(spec.quiver, dim, data['mats'], spec.field)


def read_matrix(path: str, field: Field = QQ) -> ExactMatrix:
    return ExactMatrix.from_rows(load_json(path, MATRIX_SCHEMA), field)


def read_dims(path: str, quiver: Quiver) -> List[DimVector]:
    return [DimVector.of(quiver, d) for d in load_json(path, DIMS_LIST_SCHEMA)]


def quiver_spec_to_json(q: Quiver, dim: Optional[DimVector] = None, field: Field = QQ) -> dict:

    data = {
        'vertices': list(q.vertices),
        'arrows': [{'id': a.id, 'tail': a.tail, 'head': a.head} for a in q.arrows],
    }
    if dim is not None:
        data['dim'] = dim.as_dict()
    data['field'] = field_to_json(field)
    return data


def rep_to_json(v: Representation) -> dict:
    return {
        'quiver': quiver_spec_to_json(v.quiver, v.dim, v.field),
        'mats': {a: m.to_json() for a, m in v.mats},
    }


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2)
