from src.prmweights.gf.field import (
    FieldElement,
    FieldSpec,
    add,
    field_from_json,
    field_new,
    inv,
    mul,
    neg,
    sub,
)
