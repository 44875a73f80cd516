import logging
import re
from functools import lru_cache
from pathlib import Path
from typing import Optional

from . import catalog
from .errors import CanonvecError, ConfigError
from .graphs import pair_action_group
from .group import PermutationGroup
from .parser import load_group_file
from .tree import GenerationConfig, Mode, Strategy, staircase_config

logger = logging.getLogger(__name__)

_NAMED = re.compile(r"^(trivial|cyclic|dihedral|symmetric|alternating|pairs)(\d+)$")


class UnknownGroupError(CanonvecError, LookupError):
    """A group source is neither a catalog name nor a readable group file."""


@lru_cache(maxsize=128)
def named_group(name: str) -> PermutationGroup:
    """
    Catalog lookup: trivialN, cyclicN, dihedralN, symmetricN, alternatingN,
    pairsN (S_N on node pairs) and frobenius20.
    """
    if name == "frobenius20":
        return catalog.frobenius_20()
    match = _NAMED.match(name)
    if not match:
        raise UnknownGroupError(f"unknown group name '{name}'")
    family, n = match.group(1), int(match.group(2))
    if n < 1 or (family == "pairs" and n < 2):
        raise UnknownGroupError(f"'{name}' needs a larger degree")
    builders = {
        "trivial": catalog.trivial,
        "cyclic": catalog.cyclic,
        "dihedral": catalog.dihedral,
        "symmetric": catalog.symmetric,
        "alternating": catalog.alternating,
        "pairs": pair_action_group,
    }
    return builders[family](n)


@lru_cache(maxsize=128)
def _group_from_file(path: str, mtime_ns: int) -> PermutationGroup:
    # keyed on the modification time, so an edited file is read again
    n, generators = load_group_file(Path(path))
    return PermutationGroup(n, generators, name=Path(path).stem)


def resolve_group(source: str) -> PermutationGroup:
    """A catalog name or the path of a group file; the chain is built once per source."""
    source = source.strip()
    if _NAMED.match(source) or source == "frobenius20":
        return named_group(source)
    path = Path(source).expanduser()
    if not path.is_file():
        raise UnknownGroupError(f"'{source}' is neither a catalog name nor a group file")
    path = path.resolve()
    group = _group_from_file(str(path), path.stat().st_mtime_ns)
    logger.debug("loaded %r from %s", group, path)
    return group


def build_config(
    group: PermutationGroup,
    degree: Optional[int] = None,
    max_degree: Optional[int] = None,
    max_part: Optional[int] = None,
    staircase: bool = False,
    strategy: Strategy = Strategy.BFS,
) -> GenerationConfig:
    """Turn the constraint options of the CLI and the web API into a GenerationConfig."""
    if degree is not None and max_degree is not None:
        raise ConfigError("give either a degree or a maximal degree, not both")
    if staircase:
        if degree is not None or max_degree is not None or max_part is not None:
            raise ConfigError("the staircase already fixes the constraints")
        return staircase_config(group, strategy)
    if degree is not None:
        return GenerationConfig(group, Mode.BY_DEGREE, degree=degree, max_part=max_part, strategy=strategy)
    if max_degree is not None:
        return GenerationConfig(group, Mode.UP_TO_DEGREE, degree=max_degree, max_part=max_part, strategy=strategy)
    if max_part is None:
        raise ConfigError("nothing bounds the enumeration: give a degree, a maximal degree, a max part or the staircase")
    return GenerationConfig(group, Mode.ALL, max_part=max_part, strategy=strategy)
