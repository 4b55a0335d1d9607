"""
Structured reports for the command line.

ComputeReport drives a BraidedHopfAlgebra through every certificate and
collects the results in a plain dict, so that the same data renders as
text (pandas tables) or JSON.  Reports carry no timestamps; identical
inputs give identical bytes.
"""
import json
import logging

import pandas as pd

from config import EngineSettings
from exceptions import DegreeBoundError, EngineError, OrbitCapError
from qfield import format_ratq
from rootdata import SubRootDatum, ValidationReport, validate_sub_root_datum
from uqalgebra import format_element
from braided import (BraidedHopfAlgebra, CheckReport, action_table, braiding_matrix, hecke_detector,
                     integrability_check, nichols_check, pairing_rank, relations_at_degree,
                     verify_zero_component)
from properties import PropertyResult


logger = logging.getLogger(__name__)


def _weight(weight) -> list[int] | None:
    return None if weight is None else [int(v) for v in weight]


class ComputeReport:
    def __init__(self, s: SubRootDatum, settings: EngineSettings):
        self.s = s
        self.settings = settings
        self.engine = BraidedHopfAlgebra(s, max_degree=settings.max_degree, orbit_cap=settings.orbit_cap)
        self.halted: EngineError | None = None
        self._check_reports: list[CheckReport | None] = [None, None]
        names = s.ambient.names
        self.data: dict = {
            'subject': s.label(),
            'ambient': s.ambient.label(),
            'sub': s.sub.label(),
            'iota': [names[i] for i in s.iota],
            'deleted': [names[d] for d in s.D],
            'max_degree': settings.max_degree,
            'partial': False,
        }

    @property
    def checks(self) -> list[CheckReport]:
        return [c for c in self._check_reports if c is not None]

    def _validate(self) -> None:
        report = validate_sub_root_datum(self.s)
        self.data['validation'] = validation_to_dict(report)
        report.require()

    def _degree_one(self) -> None:
        b1 = self.engine.compute_B1()
        self.data['index'] = len(b1)
        self.data['corank'] = len(self.s.D)
        self.data['b1'] = [
            {'label': label, 'element': format_element(v.value), 'origin': origin, 'weight': _weight(v.weight)}
            for label, v, origin in zip(b1.labels, b1.vectors, b1.origins)
        ]
        table = action_table(self.engine, b1)
        self.data['action'] = {'labels': table.labels, 'matrices': table.to_dict()}
        for g in table.matrices:
            logger.debug('Action of %s on B_1:\n%s', g, table.to_frame(g).to_string())

    def _graded_dimensions(self) -> None:
        N = self.settings.max_degree
        self.data['hilbert'] = self.engine.hilbert_series(N)
        self.data['certificates'] = [
            {'degree': c.degree, 'products': c.products_dim, 'projection': c.projection_dim,
             'projected_words': c.projected_words, 'window': list(c.window)}
            for _, c in sorted(self.engine.certificates.items())
        ]
        logger.debug('Hilbert series:\n%s',
                     pd.DataFrame({'dim': self.data['hilbert']}).rename_axis('n').to_string())

    def _braiding(self) -> None:
        bm = braiding_matrix(self.engine)
        self.data['braiding'] = bm.entries()
        hecke = hecke_detector(bm)
        self.data['hecke'] = None if hecke is None else {
            'alpha': format_ratq(hecke.alpha),
            'beta': None if hecke.beta is None else format_ratq(hecke.beta),
            'multiplicities': list(hecke.multiplicities),
            'relation': hecke.describe(),
        }

    def _relations(self) -> None:
        relations = relations_at_degree(self.engine, 2)
        self.data['relations'] = {
            'degree': 2,
            'dimension': relations.dimension,
            'relations': relations.formatted(self.engine.compute_B1().labels),
        }

    def _nichols(self) -> None:
        report = nichols_check(self.engine, self.settings.max_degree)
        self._check_reports[0] = report
        self.data['nichols'] = report.to_dict()

    def _integrability(self) -> None:
        report = integrability_check(self.engine, self.engine.compute_B1(), self.settings.nilbound)
        self.data['integrability'] = {
            'nilbound': report.nilbound,
            'passed': report.passed,
            'degrees': [{'vector': label, 'generator': g, 'nilpotency': k}
                        for (label, g), k in report.degrees.items()],
        }

    def _zero_component(self) -> None:
        report = verify_zero_component(self.engine)
        self._check_reports[1] = report
        self.data['zero_component'] = report.to_dict()

    def _weights(self) -> None:
        names = self.s.ambient.names
        self.data['highest_weights'] = [
            {'d': names[h.d], 'weight': _weight(h.weight), 'dimension': h.dimension,
             'primitive': h.primitive, 'dominant': h.dominant}
            for h in self.engine.highest_weights()
        ]
        maxlen = min(2, self.settings.max_degree)
        self.data['module_generators'] = [
            {'word': [names[i] for i in g.word], 'element': format_element(g.element.value),
             'weight': _weight(g.weight), 'coinvariant': g.coinvariant, 'primitive': g.primitive}
            for g in self.engine.module_generators(maxlen)
        ]

    def _pairing(self) -> None:
        ranks = []
        for n in range(min(3, self.settings.max_degree) + 1):
            r, dim = pairing_rank(self.engine, n)
            ranks.append({'degree': n, 'rank': r, 'dimension': dim})
        self.data['pairing_rank'] = ranks

    def run(self) -> dict:
        N = self.settings.max_degree
        steps = [
            ('Validating the sub-root datum', self._validate, 0),
            ('Computing B_1 and the action table', self._degree_one, 1),
            (f'Computing B_n for n <= {N} twice', self._graded_dimensions, 1),
            ('Computing the braiding on B_1 (x) B_1', self._braiding, 2),
            ('Computing relations in degree 2', self._relations, 2),
            (f'Checking the Nichols property up to degree {N}', self._nichols, 1),
            ('Checking integrability of B_1', self._integrability, 1),
            ('Checking the degree-0 component', self._zero_component, 1),
            ('Computing highest weights and module generators', self._weights, 1),
            ('Computing pairing ranks on B_n', self._pairing, 0),
        ]
        for step, (title, action, needed) in enumerate(steps, start=1):
            if needed > N:
                logger.info('STEP %d: %s skipped (degree bound %d)', step, title, N)
                continue
            logger.info('STEP %d: %s', step, title)
            try:
                action()
            except (OrbitCapError, DegreeBoundError) as e:
                self._mark_partial(e)
                break
        if not self.data['partial']:
            logger.info('✓ %s (index %s, corank %d)', self.s.label(), self.data.get('index'), len(self.s.D))
        return self.data

    def _mark_partial(self, e: EngineError) -> None:
        logger.warning('Computation stopped early: %s', e)
        self.halted = e
        self.data['partial'] = True
        marker = {'reason': str(e)}
        if isinstance(e, OrbitCapError):
            marker['cap'] = e.cap
            if e.partial is not None:
                marker['partial_dimension'] = len(e.partial)
        else:
            marker['degree'] = e.degree
            marker['bound'] = e.bound
        self.data['cap_exceeded'] = marker

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and self.data.get('integrability', {}).get('passed', True)


def validation_to_dict(report: ValidationReport) -> dict:
    return {
        'subject': report.subject,
        'ok': report.ok,
        'conditions': [{'label': c.label, 'title': c.title, 'passed': c.passed, 'witness': c.witness}
                       for c in report.conditions],
    }


def properties_to_dict(results: list[PropertyResult]) -> dict:
    return {
        'passed': all(r.passed for r in results),
        'properties': [{'name': r.name, 'passed': r.passed, 'checked': r.checked,
                        'skipped': r.skipped, 'witness': r.witness} for r in results],
    }


def render_json(data) -> str:
    return json.dumps(data, indent=2, ensure_ascii=False) + '\n'


def _section(title: str) -> list[str]:
    return ['', title, '-' * len(title)]


def _checks_text(report: dict) -> list[str]:
    lines = []
    for item in report['items']:
        mark = 'ok' if item['passed'] else 'FAILED'
        lines.append(f'  [{mark}] {item["name"]}' + (f': {item["witness"]}' if item['witness'] else ''))
    return lines


def render_validation_text(reports: list[dict]) -> str:
    lines = []
    for report in reports:
        lines.append(f'{report["subject"]}: {"valid" if report["ok"] else "INVALID"}')
        frame = pd.DataFrame(report['conditions']).set_index('label')
        lines.append(frame.to_string())
    return '\n'.join(lines) + '\n'


def render_properties_text(data: dict) -> str:
    frame = pd.DataFrame(data['properties'])[['name', 'passed', 'checked', 'skipped']]
    lines = [frame.to_string(index=False)]
    for item in data['properties']:
        if not item['passed']:
            lines.append(f'FAILED {item["name"]}: {item["witness"]}')
    lines.append('selftest ' + ('passed' if data['passed'] else 'FAILED'))
    return '\n'.join(lines) + '\n'


def render_text(data: dict) -> str:
    lines = [f'B({data["subject"]})', f'iota: {", ".join(data["iota"]) or "-"}',
             f'deleted nodes D: {", ".join(data["deleted"]) or "-"}', f'degree bound: {data["max_degree"]}']
    if data['partial']:
        marker = data['cap_exceeded']
        lines.append(f'PARTIAL REPORT: {marker["reason"]}')
    if 'index' in data:
        lines.append(f'index: {data["index"]}  corank: {data["corank"]}')
    if 'b1' in data:
        lines += _section('Basis of B_1')
        lines += [f'  {b["label"]} = {b["element"]}    [{b["origin"]}]' for b in data['b1']]
    if data.get('action', {}).get('labels'):
        labels = data['action']['labels']
        for g, matrix in data['action']['matrices'].items():
            lines += _section(f'Action of {g} on B_1')
            lines.append(pd.DataFrame(matrix, index=labels, columns=labels).to_string())
    if 'hilbert' in data:
        lines += _section('Hilbert series')
        lines.append(pd.DataFrame({'dim': data['hilbert']}).rename_axis('n').T.to_string())
    if data.get('braiding'):
        lines += _section('Braiding on B_1 (x) B_1')
        lines += [f'  {entry}' for entry in data['braiding']]
    if data.get('hecke'):
        lines.append(f'  Hecke: {data["hecke"]["relation"]}')
    if 'relations' in data:
        relations = data['relations']
        lines += _section(f'Relations in degree {relations["degree"]} (dimension {relations["dimension"]})')
        lines += [f'  {r}' for r in relations['relations']]
    for key in ('nichols', 'zero_component'):
        if key in data:
            lines += _section(data[key]['title'])
            lines += _checks_text(data[key])
    if 'integrability' in data:
        integrability = data['integrability']
        lines += _section(f'Integrability (nilbound {integrability["nilbound"]})')
        if integrability['degrees']:
            frame = pd.DataFrame(integrability['degrees']).pivot(index='vector', columns='generator',
                                                                 values='nilpotency')
            lines.append(frame.to_string())
        lines.append('  passed' if integrability['passed'] else '  FAILED')
    if data.get('highest_weights'):
        lines += _section('Highest weights')
        lines.append(pd.DataFrame(data['highest_weights']).to_string(index=False))
    if data.get('module_generators'):
        lines += _section('Module generators F_gamma H_gamma')
        lines.append(pd.DataFrame(data['module_generators']).to_string(index=False))
    if 'pairing_rank' in data:
        lines += _section('Pairing rank on B_n')
        lines.append(pd.DataFrame(data['pairing_rank']).to_string(index=False))
    return '\n'.join(lines) + '\n'


def render(data, fmt: str, kind: str = 'compute') -> str:
    if fmt == 'json':
        return render_json(data)
    if kind == 'validate':
        return render_validation_text(data)
    if kind == 'selftest':
        return render_properties_text(data)
    return render_text(data)
