import argparse
import logging
from pathlib import Path
import sys

from config import RunConfig
from exceptions import EngineError, PropertyFailure
from properties import PropertySuite
from report import ComputeReport, properties_to_dict, render, validation_to_dict
from rootdata import builtin_datum, empty_sub_datum, load_any, load_sub_datum, standard_embedding, validate_any
from braided import BraidedHopfAlgebra
from utils import write_text


def setup_logging(verbose: bool = False, log_file: str | None = None) -> None:
    """Configure root logger with console output."""
    level = logging.DEBUG if verbose else logging.INFO

    console_formatter = logging.Formatter('%(levelname)s: %(message)s')
    file_formatter = logging.Formatter(
        '%(asctime)s %(levelname)s [%(filename)s:%(lineno)d] %(message)s',
        datefmt='%Y-%m-%d %H:%M:%S %z'
    )

    console_handler = logging.StreamHandler()
    console_handler.setFormatter(console_formatter)
    handlers: list[logging.Handler] = [console_handler]

    if log_file:
        file_handler = logging.FileHandler(log_file, encoding='utf-8')
        file_handler.setFormatter(file_formatter)
        handlers.append(file_handler)

    root = logging.getLogger()
    root.setLevel(level)
    for handler in handlers:
        root.addHandler(handler)


def parse_args(argv: list[str] | None = None) -> argparse.Namespace:
    """Parse command-line arguments."""
    parser = argparse.ArgumentParser(
        prog='qbraid',
        description='qbraid: exact computation of quantum groups and the braided Hopf algebras of sub-root data.',
    )

    parser.add_argument(
        '--version',
        action='version',
        help='Show program version and exit.',
        version='qbraid 0.1.0',
    )

    subparsers = parser.add_subparsers(dest='command', help=None)

    common_option_parser = argparse.ArgumentParser(add_help=False)
    common_option_parser.add_argument(
        '--verbose', '-V',
        action='store_true',
        help='Enable verbose (DEBUG) logging.',
    )
    common_option_parser.add_argument(
        '--log',
        action='store',
        help='Path to a log file to save log. In default, logs are only printed to console.',
    )
    common_option_parser.add_argument(
        '--config',
        type=Path,
        default=None,
        help='Path to an engine config.toml (created with defaults when missing).',
    )
    common_option_parser.add_argument(
        '--max-degree',
        type=int,
        default=None,
        help='Degree bound N on the deleted-node grading (default: from config, 6).',
    )
    common_option_parser.add_argument(
        '--orbit-cap',
        type=int,
        default=None,
        help='Largest basis size computed before giving up with exit code 3 (default: 512).',
    )
    common_option_parser.add_argument(
        '--format',
        choices=['text', 'json'],
        default=None,
        help='Report format (default: text).',
    )
    common_option_parser.add_argument(
        '--seed',
        type=int,
        default=None,
        help='Seed of the randomized property checks.',
    )
    common_option_parser.add_argument(
        '--out',
        type=Path,
        default=None,
        help='Write the report to this file instead of standard output.',
    )

    validate_parser = subparsers.add_parser('validate',
                                            help='Check root data and sub-root data files',
                                            parents=[common_option_parser])
    validate_parser.add_argument('paths', nargs='+', type=Path,
                                 help='Root datum or sub-root datum JSON files.')
    validate_parser.set_defaults(func=validate)

    compute_parser = subparsers.add_parser('compute',
                                           help='Compute B(T, J, iota, q) and its certificates',
                                           parents=[common_option_parser])
    compute_parser.add_argument('subdatum', type=Path,
                                help='Sub-root datum JSON file.')
    compute_parser.set_defaults(func=compute)

    selftest_parser = subparsers.add_parser('selftest',
                                            help='Run the embedded property suites at small bounds',
                                            parents=[common_option_parser])
    selftest_parser.add_argument('--corrupt-serre', action='store_true', help=argparse.SUPPRESS)
    selftest_parser.set_defaults(func=selftest)

    return parser.parse_args(argv)


def emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    write_text(out, text)
    logging.info('Report saved to %s', out.absolute())


def validate(args: argparse.Namespace) -> int:
    setup_logging(args.verbose, log_file=args.log)
    run = RunConfig.from_args(args)
    settings = run.settings
    reports = []
    for path in run.paths:
        logging.info('Validating %s', path)
        for report in validate_any(load_any(path)):
            reports.append(validation_to_dict(report))
            if report.ok:
                logging.info('✓ %s', report.subject)
            else:
                logging.error('%s fails condition(s) %s', report.subject, ', '.join(report.failed))
    emit(render(reports, settings.format, kind='validate'), args.out)
    return 0 if all(r['ok'] for r in reports) else 1


def compute(args: argparse.Namespace) -> int:
    setup_logging(args.verbose, log_file=args.log)
    run = RunConfig.from_args(args)
    settings = run.settings
    s = load_sub_datum(run.paths[0])
    report = ComputeReport(s, settings)
    data = report.run()
    emit(render(data, settings.format), args.out)
    if report.halted is not None:
        logging.error('Run halted: %s', report.halted)
        return report.halted.exit_code
    if not report.passed:
        logging.error('Some certificates failed for %s', s.label())
        return 1
    return 0


def selftest_subjects():
    a3 = builtin_datum('A', 3, 'gl')
    return [standard_embedding(a3, builtin_datum('A', 2, 'gl'), (0, 1)),
            empty_sub_datum(builtin_datum('A', 2, 'gl'))]


def selftest(args: argparse.Namespace) -> int:
    setup_logging(args.verbose, log_file=args.log)
    settings = RunConfig.from_args(args).settings
    bound = args.max_degree if args.max_degree is not None else min(3, settings.max_degree)
    suites = []
    failure = None
    for s in selftest_subjects():
        logging.info('Property suites on %s (degree bound %d, seed %d)', s.label(), bound, settings.seed)
        engine = BraidedHopfAlgebra(s, max_degree=bound, orbit_cap=settings.orbit_cap)
        suite = PropertySuite(engine, seed=settings.seed, trials=settings.random_trials,
                              map_trials=settings.map_trials, corrupt_serre=args.corrupt_serre)
        results = suite.run()
        suites.append({'subject': s.label(), **properties_to_dict(results)})
        for result in results:
            if not result.passed and failure is None:
                failure = PropertyFailure(s.label(), result.name, result.witness)
    if settings.format == 'json':
        emit(render(suites, 'json'), args.out)
    else:
        emit(''.join(f'{suite["subject"]}\n' + render(suite, 'text', kind='selftest') for suite in suites), args.out)
    if failure is not None:
        raise failure
    return 0


def main(argv: list[str] | None = None) -> None:
    args = parse_args(argv)

    if args.command is None:
        parse_args(['--help'])
        return

    try:
        code = args.func(args)
    except EngineError as e:
        logging.error('Run halted: %s', e)
        sys.exit(e.exit_code)
    if code:
        sys.exit(code)


if __name__ == '__main__':
    main()
