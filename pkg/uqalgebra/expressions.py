"""
Text format for elements of U_q.

    (q**2 - 1)/q*F[1]*F[3]*K[0,1,-1]*E[2] - F[2]

Generators are F[name], E[name] and K[m_1,...,m_n] with index names taken
from the root datum; coefficients are rational functions of q.  Parsing goes
through sympy with noncommutative generator symbols, so any product, power
and sum sympy can expand is accepted.
"""
import logging
import re

from sympy import Add, Mul, Symbol, expand
from sympy.parsing.sympy_parser import parse_expr

from exceptions import DatumFormatError, InputError
from qfield import QF, _TRANSFORMS, format_ratq, q_symbol
from uqalgebra.elements import Term, UElement
from uqalgebra.quantumgroup import QuantumGroup


logger = logging.getLogger(__name__)

_GENERATOR = re.compile(r'([EFK])\[([^\]]*)\]')


def format_term(algebra: QuantumGroup, term: Term) -> str:
    names = algebra.datum.names
    f, mu, e = term
    factors = [f'F[{names[i]}]' for i in f]
    if any(mu):
        factors.append(f'K[{",".join(str(v) for v in mu)}]')
    factors.extend(f'E[{names[i]}]' for i in e)
    return '*'.join(factors)


def format_element(x: UElement) -> str:
    if x.is_zero():
        return '0'
    pieces = []
    for term in x.support():
        coeff = x.terms[term]
        text = format_ratq(coeff)
        negative = text.startswith('-')
        if negative:
            text = format_ratq(-coeff)
        monomial = format_term(x.algebra, term)
        if not monomial:
            body = text
        elif text == '1':
            body = monomial
        else:
            body = f'({text})*{monomial}'
        if not pieces:
            pieces.append(f'-{body}' if negative else body)
        else:
            pieces.append(f'- {body}' if negative else f'+ {body}')
    return ' '.join(pieces)


def parse_element(text: str, algebra: QuantumGroup) -> UElement:
    datum = algebra.datum
    generators: dict[str, tuple[str, object]] = {}

    def substitute(match: re.Match) -> str:
        kind, inside = match.group(1), match.group(2).strip()
        if kind == 'K':
            try:
                mu = tuple(int(v) for v in inside.split(',')) if inside else ()
            except ValueError as e:
                raise DatumFormatError(f'Bad K exponent {inside!r}: {e}', location=match.group(0)) from e
            if len(mu) != datum.n:
                raise DatumFormatError(f'K needs {datum.n} entries, got {len(mu)}', location=match.group(0))
            name = 'K_' + '_'.join(str(v).replace('-', 'm') for v in mu)
            generators[name] = ('K', mu)
        else:
            try:
                index = datum.index(inside)
            except InputError as e:
                raise DatumFormatError(str(e), location=match.group(0)) from e
            name = f'{kind}_{index}'
            generators[name] = (kind, index)
        return name

    rewritten = _GENERATOR.sub(substitute, text)
    symbols = {name: Symbol(name, commutative=False) for name in generators}
    try:
        expr = expand(parse_expr(rewritten, local_dict={**symbols, 'q': q_symbol}, transformations=_TRANSFORMS))
    except Exception as e:
        raise DatumFormatError(f'Cannot parse element {text!r}: {e}') from e

    total = algebra.zero()
    for summand in Add.make_args(expr):
        commutative, noncommutative = summand.args_cnc()
        scalar = Mul(*commutative)
        if scalar.free_symbols - {q_symbol}:
            raise DatumFormatError(f'Unknown symbols {sorted(map(str, scalar.free_symbols - {q_symbol}))} '
                                   f'in {text!r}')
        try:
            value = algebra.scalar(QF.from_sympy(scalar))
        except Exception as e:
            raise DatumFormatError(f'Coefficient {scalar} is not a rational function of q: {e}') from e
        for factor in noncommutative:
            base, exponent = factor.as_base_exp()
            if not exponent.is_Integer or str(base) not in generators:
                raise DatumFormatError(f'Unsupported factor {factor} in {text!r}')
            kind, data = generators[str(base)]
            power = int(exponent)
            if kind == 'K':
                generator = algebra.K(tuple(power * v for v in data))
                value = algebra.multiply(value, generator)
                continue
            if power < 0:
                raise DatumFormatError(f'Negative power of {kind}[{datum.names[data]}] in {text!r}')
            generator = algebra.F(data) if kind == 'F' else algebra.E(data)
            value = algebra.multiply(value, algebra.power(generator, power))
        total = total + value
    return total
