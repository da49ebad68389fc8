from rest_framework import serializers

from torsionlab.jobs.runner import STATUSES

VALUE_TYPES = ("polynomial", "rational", "scalar")


class TermField(serializers.Field):
    """A term as ``[[e_1, ..., e_n], "coefficient"]``."""

    default_error_messages = {"invalid": "Expected [[exponents], coefficient], got {value!r}."}

    def to_representation(self, value):
        exponents, coefficient = value
        return [[int(e) for e in exponents], str(coefficient)]

    def to_internal_value(self, data):
        if not isinstance(data, (list, tuple)) or len(data) != 2:
            self.fail("invalid", value=data)
        exponents, coefficient = data
        if not isinstance(exponents, list) or not all(isinstance(e, int) for e in exponents):
            self.fail("invalid", value=data)
        if not isinstance(coefficient, str):
            self.fail("invalid", value=data)
        return tuple(exponents), coefficient


class PolynomialSerializer(serializers.Serializer):
    terms = serializers.ListField(child=TermField())


class ValueSerializer(serializers.Serializer):
    type = serializers.ChoiceField(choices=VALUE_TYPES)
    vars = serializers.ListField(child=serializers.CharField(), required=False)
    terms = serializers.ListField(child=TermField(), required=False)
    numerator = PolynomialSerializer(required=False)
    denominator = PolynomialSerializer(required=False)
    scalar = serializers.CharField(required=False)

    def validate(self, attrs):
        needed = {
            "polynomial": ("vars", "terms"),
            "rational": ("vars", "numerator", "denominator"),
            "scalar": ("scalar",),
        }[attrs["type"]]
        missing = [key for key in needed if key not in attrs]
        if missing:
            raise serializers.ValidationError(f"a {attrs['type']} value needs {', '.join(missing)}")
        return attrs


class TaskResultSerializer(serializers.Serializer):
    task = serializers.CharField()
    kind = serializers.CharField()
    status = serializers.ChoiceField(choices=STATUSES)
    value = ValueSerializer(allow_null=True)
    label = serializers.CharField(allow_null=True)
    ambiguity = serializers.CharField(allow_null=True)
    notes = serializers.ListField(child=serializers.CharField())
    details = serializers.JSONField()
    error = serializers.CharField(allow_null=True)


class ExtensionSerializer(serializers.Serializer):
    name = serializers.CharField()
    minpoly = serializers.CharField()


class FieldSerializer(serializers.Serializer):
    params = serializers.ListField(child=serializers.CharField())
    extensions = ExtensionSerializer(many=True)


class ReportSerializer(serializers.Serializer):
    format = serializers.CharField()
    version = serializers.IntegerField()
    source = serializers.CharField(allow_null=True)
    seed = serializers.IntegerField()
    field = FieldSerializer()
    vars = serializers.ListField(child=serializers.CharField(), allow_empty=False)
    tasks = TaskResultSerializer(many=True)
