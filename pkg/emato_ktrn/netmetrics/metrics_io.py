import os
from typing import List, Tuple

from ..data_classes import AggregateSummary, MetricsRecord
from ..helpers.misc import format_value, parse_value, read_csv, write_csv
from .aggregate import METRIC_COLUMNS
from .exceptions import MetricsError

METRICS_HEADER = ['run_id', 'generation'] + METRIC_COLUMNS
AGGREGATE_HEADER = ['metric', 'summary', 'mean', 'std', 'na_fraction']

# (run_id, generation, record)
MetricsRow = Tuple[str, int, MetricsRecord]


def save_metrics(rows: List[MetricsRow], file_path: str) -> None:
    write_csv(file_path, METRICS_HEADER,
              ([run_id, generation] + [format_value(record.value(c)) for c in METRIC_COLUMNS]
               for run_id, generation, record in rows))


def load_metrics(file_path: str) -> List[MetricsRow]:
    if not os.path.exists(file_path):
        raise MetricsError(f'could not find metrics file {file_path}')
    rows = []
    for line in read_csv(file_path):
        values = {c: parse_value(line[c]) for c in METRIC_COLUMNS}
        record = MetricsRecord(density=values['D'],
                               clustering=values['C'],
                               diameter=values['DIA'],
                               assortativity=values['A'],
                               sac=values['SAC'],
                               heterogeneity=values['H'],
                               components=int(values['components'] or 0))
        rows.append((line['run_id'], int(line['generation']), record))
    return rows


def save_aggregate(summary: AggregateSummary, file_path: str) -> None:
    write_csv(file_path, AGGREGATE_HEADER,
              ([column, s.cell, format_value(s.mean), format_value(s.std), format_value(s.na_fraction)]
               for column, s in summary.summaries.items()))


def save_table(rows: List[List[str]], file_path: str) -> None:
    write_csv(file_path, rows[0], rows[1:])
