class ConfigurationError(ValueError):
    '''
    ConfigurationError is raised before any computation starts when an algorithm or run configuration is invalid.
    The command line maps it to exit code 2.
    '''
