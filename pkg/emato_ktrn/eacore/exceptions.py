class OperatorError(ValueError):
    '''
    OperatorError is raised when a variation operator cannot be applied,
    e.g. because the population is too small or the genomes have different lengths.
    '''


class BudgetExhaustedError(Exception):
    '''
    BudgetExhaustedError is raised by the evaluator when an evaluation would break the per task budget contract.
    Algorithms check the remaining budget before each generation, so this only fires on programming errors.
    '''
