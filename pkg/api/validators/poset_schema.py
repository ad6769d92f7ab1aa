"""
Posetkit - Poset Document Schemas

Marshmallow schemas for posets in structured (JSON/YAML) form: element
names, cover pairs and optional bounds.
"""

from marshmallow import Schema, ValidationError, fields, validate, validates_schema

from api.validators.custom_validators import PosetRuleValidator, validate_token


class PosetDocumentSchema(Schema):
    """
    A poset as names plus cover pairs.

    Used for machine-readable output of parsed and derived posets and for
    reading them back.
    """

    name = fields.String(load_default=None, allow_none=True)
    elements = fields.List(fields.String(validate=validate_token), required=True,
                           validate=validate.Length(min=1, error="A poset needs at least one element"))
    covers = fields.List(fields.List(fields.String(), validate=validate.Length(equal=2)),
                         load_default=list)
    bottom = fields.String(load_default=None, allow_none=True)
    top = fields.String(load_default=None, allow_none=True)

    class Meta:
        ordered = True

    @validates_schema
    def validate_structure(self, data, **kwargs):
        names = data.get('elements') or []
        errors = PosetRuleValidator.validate_unique_names(names)
        errors += PosetRuleValidator.validate_cover_endpoints(names, data.get('covers') or [])
        errors += PosetRuleValidator.validate_bounds(names, data.get('bottom'), data.get('top'))
        if errors:
            raise ValidationError(errors, field_name='elements')

