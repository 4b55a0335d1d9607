from .checks import CheckItem, CheckReport, embedding_relations_check, nichols_check, verify_zero_component
from .degrees import (
    AgreementCertificate,
    BElement,
    BraidedHopfAlgebra,
    Generator,
    GradedBasis,
    HighestWeight,
    IndexReport,
    ModuleGenerator,
)
from .projection import Projection
from .structure import (
    ActionTable,
    BraidingMatrix,
    HeckeResult,
    IntegrabilityReport,
    PrimitiveSpace,
    RelationSpace,
    action_table,
    braid_equation_holds,
    braiding_matrix,
    hecke_detector,
    integrability_check,
    is_invertible,
    pairing_rank,
    primitives_at_degree,
    reduced_coproduct,
    relations_at_degree,
    tensor_coordinates,
)

__all__ = [
    'ActionTable',
    'AgreementCertificate',
    'BElement',
    'BraidedHopfAlgebra',
    'BraidingMatrix',
    'CheckItem',
    'CheckReport',
    'Generator',
    'GradedBasis',
    'HeckeResult',
    'HighestWeight',
    'IndexReport',
    'IntegrabilityReport',
    'ModuleGenerator',
    'PrimitiveSpace',
    'Projection',
    'RelationSpace',
    'action_table',
    'braid_equation_holds',
    'braiding_matrix',
    'embedding_relations_check',
    'hecke_detector',
    'integrability_check',
    'is_invertible',
    'nichols_check',
    'pairing_rank',
    'primitives_at_degree',
    'reduced_coproduct',
    'relations_at_degree',
    'tensor_coordinates',
    'verify_zero_component',
]
