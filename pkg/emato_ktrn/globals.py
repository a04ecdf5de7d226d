from .helpers import environment_reader


class Globals():
    def __init__(self) -> None:
        self.output_folder: str = environment_reader.output_folder('./results')
        self.workers: int = environment_reader.workers()


GLOBALS = Globals()
