import logging
import os
from typing import List, Optional

import psutil


def read_from_env(possible_names: List[str], ignore_errors: bool = True) -> Optional[str]:
    values = [os.environ.get(name, None) for name in possible_names]
    values = list(filter(None, values))

    # Possible error: no values are set
    if not values:
        if ignore_errors:
            logging.debug('no environment variable set for %s', possible_names)
            return None
        raise ValueError(f'no environment variable set for {possible_names}')

    # Possible error: multiple values are not None and not equal
    if len(values) > 1 and len(set(values)) > 1:
        if ignore_errors:
            logging.warning('different environment variables set for %s: %s', possible_names, values)
            return None
        raise ValueError(f'different environment variables set for {possible_names}: {values}')

    return values[0]


def output_folder(default: str = '') -> str:
    return read_from_env(['EMATO_OUTPUT_FOLDER', 'OUTPUT_FOLDER']) or default


def workers(default: Optional[int] = None) -> int:
    value = read_from_env(['EMATO_WORKERS'])
    if value is not None:
        try:
            return max(1, int(value))
        except ValueError:
            logging.warning('ignoring non-integer EMATO_WORKERS=%s', value)
    if default is not None:
        return default
    return psutil.cpu_count(logical=False) or 1


def progress_enabled() -> bool:
    return (read_from_env(['EMATO_NO_PROGRESS']) or '0').lower() not in ['true', '1']


def full_acceptance() -> bool:
    return (read_from_env(['EMATO_FULL_ACCEPTANCE']) or '0').lower() in ['true', '1']
