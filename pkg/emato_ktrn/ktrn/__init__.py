from .exceptions import RecorderError
from .ktrn_io import load_ktrn, save_ktrn
from .recorder import KtrnRecorder, aggregate_graphs

__all__ = ['RecorderError', 'load_ktrn', 'save_ktrn', 'KtrnRecorder', 'aggregate_graphs']
