import logging
import sys

from dataclasses import dataclass, fields, replace
from pathlib import Path
from tomlkit import TOMLDocument, parse, dumps

from exceptions import InputError, MissingInputError


logger = logging.getLogger(__name__)


class DefaultConfig:
    def __init__(self):
        self.engine = {
            'max_degree': 6,
            'orbit_cap': 512,
            'seed': 20240611,
            'nilbound': 8,
            'format': 'text',
            'random_trials': 25,
            'map_trials': 100,
        }


@dataclass(frozen=True)
class EngineSettings:
    max_degree: int = 6
    orbit_cap: int = 512
    seed: int = 20240611
    nilbound: int = 8
    format: str = 'text'
    random_trials: int = 25
    map_trials: int = 100

    def __post_init__(self):
        if self.max_degree < 0:
            raise InputError(f'max_degree must be non-negative, got {self.max_degree}')
        if self.orbit_cap < 1:
            raise InputError(f'orbit_cap must be at least 1, got {self.orbit_cap}')
        if self.nilbound < 1:
            raise InputError(f'nilbound must be at least 1, got {self.nilbound}')
        if self.random_trials < 0:
            raise InputError(f'random_trials must be non-negative, got {self.random_trials}')
        if self.map_trials < 0:
            raise InputError(f'map_trials must be non-negative, got {self.map_trials}')
        if self.format not in ('text', 'json'):
            raise InputError(f'format must be "text" or "json", got {self.format!r}')

    @classmethod
    def from_document(cls, doc: TOMLDocument | None) -> 'EngineSettings':
        if doc is None or 'engine' not in doc:
            return cls()
        table = doc['engine'].unwrap()
        known = {f.name for f in fields(cls)}
        unknown = set(table) - known
        if unknown:
            raise InputError(f'Unknown keys in [engine]: {", ".join(sorted(unknown))}')
        try:
            return cls(**table)
        except TypeError as e:
            raise InputError(f'Invalid [engine] table: {e}') from e

    def override(self, **kwargs) -> 'EngineSettings':
        """Return a copy with every non-None keyword applied."""
        changes = {key: value for key, value in kwargs.items() if value is not None}
        return replace(self, **changes)


def open_settings(path: Path) -> TOMLDocument:
    if not path.absolute().exists():
        logger.warning('Configuration file is not found at %s. Creating a new config.toml on %s', path, path)
        conf = DefaultConfig()
        configdoc = TOMLDocument()
        configdoc['engine'] = conf.engine

        logger.debug('Creating default configuration file at %s with content:\n%s', path, dumps(configdoc))
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(dumps(configdoc))
        return configdoc
    else:
        with open(path, 'r', encoding='utf-8') as f:
            config_content = f.read()
        try:
            return parse(config_content)
        except Exception as e:
            raise InputError(f'Cannot parse configuration file {path}: {e}') from e


def get_base_directory() -> Path:
    """Directory holding config.toml.

    In PyInstaller, __file__ points to a temporary directory.
    Use the directory containing the executable instead.
    """
    if getattr(sys, 'frozen', False):
        return Path(sys.executable).parent
    return Path(__file__).parent.resolve()


def load_settings(path: Path | None = None) -> EngineSettings:
    """Settings from path (created with defaults when missing), else from a config.toml beside the program."""
    if path is None:
        default = get_base_directory() / 'config.toml'
        if not default.exists():
            return EngineSettings()
        path = default
    return EngineSettings.from_document(open_settings(path))


@dataclass(frozen=True)
class RunConfig:
    """One command-line run: the command, its input files and the effective settings."""

    command: str
    paths: tuple[Path, ...]
    settings: EngineSettings

    def __post_init__(self):
        for path in self.paths:
            if not path.absolute().exists():
                raise MissingInputError(f'File not found: {path}')

    @classmethod
    def from_args(cls, args) -> 'RunConfig':
        settings = load_settings(args.config).override(
            max_degree=args.max_degree, orbit_cap=args.orbit_cap, format=args.format, seed=args.seed)
        if args.command == 'validate':
            paths = tuple(args.paths)
        elif args.command == 'compute':
            paths = (args.subdatum,)
        else:
            paths = ()
        return cls(args.command, paths, settings)
