"""
Posetkit - Fixture Manifest Schema

Validates data/fixtures/manifest.yaml: the bundled fixture posets and the
facts claimed about each of them.
"""

from marshmallow import EXCLUDE, Schema, ValidationError, fields, validate, validates_schema

from api.validators.custom_validators import PosetRuleValidator

FACT_KINDS = ('property', 'fails_at', 'op', 'derive', 'horizontal_sum')
DERIVE_CLAIMS = ('size', 'labels', 'isomorphic_to', 'orthocomplement')


class FactSchema(Schema):
    """
    One claim about a fixture.

    Kinds:
        property: a registered property holds or not, optionally with a witness
        fails_at: a named identity fails at the given variable binding
        op: an operation on given arguments evaluates to a set or element
        derive: a derived poset has a size, labels, an isomorphism type or an orthocomplement
        horizontal_sum: the sum with another fixture is isomorphic to a third
    """

    description = fields.String()
    property = fields.String()
    holds = fields.Boolean()
    witness = fields.Dict(keys=fields.String(), values=fields.Raw())
    fails_at = fields.String()
    at = fields.Dict(keys=fields.String(), values=fields.String())
    sides = fields.List(fields.List(fields.String()), validate=validate.Length(equal=2))
    op = fields.String()
    args = fields.List(fields.String())
    equals = fields.Raw(allow_none=True)
    derive = fields.String(validate=validate.OneOf(['cl', 'dm', 'conv']))
    size = fields.Integer(validate=validate.Range(min=1))
    labels = fields.List(fields.String())
    isomorphic_to = fields.String()
    orthocomplement = fields.Dict(keys=fields.String(), values=fields.String())
    horizontal_sum = fields.String()

    @validates_schema
    def validate_kind(self, data, **kwargs):
        errors = PosetRuleValidator.validate_fact_kind(data, FACT_KINDS)
        if errors:
            raise ValidationError(errors)
        if 'property' in data and 'holds' not in data:
            raise ValidationError("A property fact needs 'holds'", field_name='holds')
        if 'fails_at' in data and 'at' not in data:
            raise ValidationError("A fails_at fact needs 'at'", field_name='at')
        if 'op' in data and ('args' not in data or 'equals' not in data):
            raise ValidationError("An op fact needs 'args' and 'equals'", field_name='op')
        if 'derive' in data and not any(k in data for k in DERIVE_CLAIMS):
            raise ValidationError(f"A derive fact needs one of {', '.join(DERIVE_CLAIMS)}", field_name='derive')
        if 'orthocomplement' in data and data.get('derive') != 'cl':
            raise ValidationError("Only a derive: cl fact has an orthocomplement", field_name='orthocomplement')
        if 'horizontal_sum' in data and 'isomorphic_to' not in data:
            raise ValidationError("A horizontal_sum fact needs 'isomorphic_to'", field_name='isomorphic_to')


class FixtureSchema(Schema):
    file = fields.String(required=True, validate=validate.Regexp(
        r'^[\w.-]+\.poset$', error="Fixture file must be a .poset file name"))
    description = fields.String(load_default='')
    facts = fields.List(fields.Nested(FactSchema), load_default=list)


class ManifestSchema(Schema):
    """The whole manifest."""

    version = fields.Integer(load_default=1)
    fixtures = fields.Dict(keys=fields.String(validate=validate.Regexp(r'^[a-z0-9_-]+$')),
                           values=fields.Nested(FixtureSchema), required=True)

    class Meta:
        unknown = EXCLUDE

    @validates_schema
    def validate_references(self, data, **kwargs):
        names = set(data.get('fixtures', {}))
        errors = []
        for name, fixture in data.get('fixtures', {}).items():
            for fact in fixture.get('facts', []):
                for key in ('isomorphic_to', 'horizontal_sum'):
                    if key in fact and fact[key] not in names:
                        errors.append(f"{name}: {key} refers to unknown fixture '{fact[key]}'")
        if errors:
            raise ValidationError(errors, field_name='fixtures')
