class BenchmarkError(ValueError):
    '''
    BenchmarkError is raised when a task or base function is evaluated outside of its contract,
    e.g. with non-finite values, a wrong dimension or a point outside of the box bounds.
    '''
