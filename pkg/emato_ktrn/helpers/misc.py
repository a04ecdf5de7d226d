import csv
import logging
import os
import shutil
from typing import Iterable, List, Optional, Sequence


def create_experiment_folder(output_dir: str, name: str) -> str:
    experiment_folder = f'{output_dir}/{name}'
    os.makedirs(experiment_folder, exist_ok=True)
    return experiment_folder


def delete_all_run_folders(experiment_folder: str) -> None:
    if not os.path.exists(experiment_folder):
        return
    for entry in os.listdir(experiment_folder):
        if entry.startswith('run_'):
            shutil.rmtree(f'{experiment_folder}/{entry}', ignore_errors=True)


def format_value(value: Optional[float]) -> str:
    """repr precision for floats, empty cell for not applicable values."""
    if value is None:
        return ''
    if isinstance(value, (int, str)):
        return str(value)
    return repr(float(value))


def parse_value(cell: str) -> Optional[float]:
    return None if cell == '' else float(cell)


def write_csv(file_path: str, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    folder = os.path.dirname(file_path)
    if folder:
        os.makedirs(folder, exist_ok=True)
    with open(file_path, 'w', newline='') as f:
        writer = csv.writer(f, lineterminator='\n')
        writer.writerow(header)
        writer.writerows(rows)
    logging.debug('wrote %s', file_path)


def read_csv(file_path: str) -> List[dict]:
    with open(file_path, 'r', newline='') as f:
        return list(csv.DictReader(f))
