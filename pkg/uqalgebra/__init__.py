from .elements import Tensor, Term, UElement
from .expressions import format_element, parse_element
from .halves import HalfAlgebra
from .quantumgroup import QuantumGroup, RelationCheck, SubAlgebraEmbedding, iota_map

__all__ = [
    'HalfAlgebra',
    'QuantumGroup',
    'RelationCheck',
    'SubAlgebraEmbedding',
    'Tensor',
    'Term',
    'UElement',
    'format_element',
    'iota_map',
    'parse_element',
]
