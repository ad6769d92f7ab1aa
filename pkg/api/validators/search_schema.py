"""
Posetkit - Search Spec Schema

Loads search requests (from CLI flags or a YAML/JSON request file) into
a SearchSpec.
"""

from marshmallow import EXCLUDE, Schema, ValidationError, fields, post_load, validate, validates_schema

from api.validators.custom_validators import PosetRuleValidator
from config.settings import Config
from core import registry
from core.search import MODES, SearchSpec
from core.theorems import SUITE_NAMES


class SearchSpecSchema(Schema):
    """
    A search request.

    Exactly one of predicate and suite is given; a suite always runs in
    verify-universal mode.
    """

    max_size = fields.Integer(required=True, validate=validate.Range(
        min=Config.MIN_ENUMERATION_SIZE,
        error=f"max_size must be at least {Config.MIN_ENUMERATION_SIZE}"))
    min_size = fields.Integer(load_default=Config.MIN_ENUMERATION_SIZE)
    predicate = fields.String(load_default=None, allow_none=True)
    suite = fields.String(load_default=None, allow_none=True, validate=validate.OneOf(
        SUITE_NAMES, error="Unknown verification suite '{input}'"))
    mode = fields.String(load_default=None, allow_none=True, validate=validate.OneOf(
        MODES, error="Mode must be one of: {choices}"))
    seed = fields.Integer(load_default=Config.DEFAULT_SEED, validate=validate.Range(min=0))
    sample = fields.Integer(load_default=None, allow_none=True, validate=validate.Range(min=1))
    threads = fields.Integer(load_default=0, validate=validate.Range(min=0))

    class Meta:
        unknown = EXCLUDE

    @validates_schema
    def validate_target(self, data, **kwargs):
        if (data.get('predicate') is None) == (data.get('suite') is None):
            raise ValidationError("Give exactly one of predicate and suite", field_name='predicate')
        if data.get('suite') is not None and data.get('mode') not in (None, 'verify-universal'):
            raise ValidationError("Suites run in verify-universal mode only", field_name='mode')
        if data.get('predicate') is not None:
            problems = PosetRuleValidator.validate_predicate_expression(data['predicate'], registry.PROPERTIES)
            if problems:
                raise ValidationError(problems, field_name='predicate')
        errors = PosetRuleValidator.validate_search_sizes(data.get('min_size', Config.MIN_ENUMERATION_SIZE),
                                                          data['max_size'])
        if errors:
            raise ValidationError(errors, field_name='max_size')

    @post_load
    def make_spec(self, data, **kwargs):
        mode = data.pop('mode') or ('verify-universal' if data.get('suite') else 'find-all')
        return SearchSpec(mode=mode, **data)
