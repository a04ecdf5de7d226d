import sys
from dataclasses import dataclass, field
from typing import Dict, List, Optional

KWONLY_SLOTS = {'kw_only': True, 'slots': True} if sys.version_info >= (3, 10) else {}

NA_CELL = '~'


@dataclass(**KWONLY_SLOTS)
class MetricsRecord():
    """Structural metrics of one transfer network. None marks a metric that is not applicable."""
    density: float = field(metadata={'description': 'D'})
    clustering: float = field(metadata={'description': 'C'})
    diameter: Optional[float] = field(default=None, metadata={'description': 'DIA, None if fragmented'})
    assortativity: Optional[float] = field(default=None, metadata={'description': 'A, None if undefined'})
    sac: Optional[float] = field(default=None, metadata={'description': 'SAC, None without components'})
    heterogeneity: Optional[float] = field(default=None, metadata={'description': 'H, None for empty graphs'})
    components: int = field(default=0, metadata={'description': 'Non-singleton weakly connected components'})

    # csv column -> attribute
    COLUMNS = {'D': 'density', 'C': 'clustering', 'DIA': 'diameter', 'A': 'assortativity',
               'SAC': 'sac', 'H': 'heterogeneity', 'components': 'components'}

    def value(self, column: str) -> Optional[float]:
        return getattr(self, self.COLUMNS[column])


@dataclass(**KWONLY_SLOTS)
class MetricSummary():
    metric: str
    mean: Optional[float]
    std: Optional[float]
    na_fraction: float
    count: int

    @property
    def cell(self) -> str:
        if self.mean is None or self.std is None:
            return NA_CELL
        return f'{self.mean:.3f} ({self.std:.3f})'


@dataclass(**KWONLY_SLOTS)
class AggregateSummary():
    summaries: Dict[str, MetricSummary] = field(default_factory=dict)

    def __getitem__(self, column: str) -> MetricSummary:
        return self.summaries[column]

    def cells(self) -> Dict[str, str]:
        return {column: summary.cell for column, summary in self.summaries.items()}

    @property
    def columns(self) -> List[str]:
        return list(self.summaries.keys())
