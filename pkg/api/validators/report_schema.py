"""
Posetkit - Report Serialization Schemas

Ordered dump schemas for property reports, derived posets and search
results. Output keys and their order are fixed so that machine-readable
output is byte-identical across runs.
"""

import json
from typing import Any

import numpy as np
from marshmallow import Schema, fields, post_dump

from api.validators.poset_schema import PosetDocumentSchema
from core.poset import Subset
from core.poset_file import poset_document


def to_plain(value: Any) -> Any:
    """Convert tuples, sets, subsets and numpy scalars into JSON-ready values."""
    if isinstance(value, Subset):
        return value.names()
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted(to_plain(v) for v in value)
    if isinstance(value, np.bool_):
        return bool(value)
    if isinstance(value, np.integer):
        return int(value)
    return value


def dumps(data: Any) -> str:
    """Stable JSON text."""
    return json.dumps(to_plain(data), ensure_ascii=False, indent=2)


class PropertyReportSchema(Schema):
    """One PropertyReport."""

    property = fields.String(required=True)
    holds = fields.Boolean(required=True)
    vacuous = fields.Boolean()
    exhaustive = fields.Boolean()
    samples = fields.Integer(allow_none=True)
    witness = fields.Raw(allow_none=True)
    details = fields.Raw()

    class Meta:
        ordered = True

    @post_dump
    def plain_values(self, data, **kwargs):
        data['witness'] = to_plain(data.get('witness'))
        data['details'] = to_plain(data.get('details') or {})
        return data


class CheckResultSchema(Schema):
    """Output of `posetkit check`: the poset identity and its reports."""

    file = fields.String()
    size = fields.Integer()
    canonical = fields.String()
    reports = fields.List(fields.Nested(PropertyReportSchema))

    class Meta:
        ordered = True


class SearchMatchSchema(Schema):
    size = fields.Integer()
    canonical = fields.String()
    poset = fields.Method('dump_poset')
    reports = fields.List(fields.Nested(PropertyReportSchema))

    class Meta:
        ordered = True

    def dump_poset(self, match):
        return poset_document(match.poset)


class SearchResultSchema(Schema):
    """
    A SearchResult without its wall time.

    Elapsed time is logged, never serialized, so that equal searches give
    equal output.
    """

    mode = fields.String()
    examined = fields.Integer()
    per_size = fields.Dict(keys=fields.String(), values=fields.Integer())
    passed = fields.Boolean(allow_none=True)
    matches = fields.List(fields.Nested(SearchMatchSchema))
    statistics = fields.Dict(keys=fields.String(), values=fields.Dict())

    class Meta:
        ordered = True

    @post_dump
    def sorted_maps(self, data, **kwargs):
        data['per_size'] = {str(k): data['per_size'][k] for k in sorted(data['per_size'], key=int)}
        data['statistics'] = {k: data['statistics'][k] for k in sorted(data['statistics'])}
        return data


class DerivedDumpSchema(PosetDocumentSchema):
    """A derived poset as written by `posetkit derive --json`."""

    kind = fields.String()
    source = fields.String(allow_none=True)
    size = fields.Integer()
    orthocomplement = fields.Dict(keys=fields.String(), values=fields.String(), allow_none=True)
    embedding = fields.Dict(keys=fields.String(), values=fields.String(), allow_none=True)
    verification = fields.Nested(PropertyReportSchema, allow_none=True)

    class Meta:
        ordered = True
