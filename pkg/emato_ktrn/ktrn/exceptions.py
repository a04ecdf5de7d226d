class RecorderError(ValueError):
    '''
    RecorderError is raised when a transfer event or finalize call violates the recording order,
    e.g. self transfers, events for already finalized generations or a double finalize.
    '''
