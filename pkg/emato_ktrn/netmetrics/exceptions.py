class MetricsError(ValueError):
    '''
    MetricsError is raised when a metric is requested for a graph it is not defined on (e.g. density with n < 2)
    or when an empty list of records is aggregated.
    '''
