class HarnessError(Exception):
    '''
    HarnessError is raised when experiment outputs cannot be combined,
    e.g. when convergence curves of different problems are compared or an output folder is missing.
    '''
