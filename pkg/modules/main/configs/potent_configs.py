import modules.main.util.constants as C
from modules.main.configs.potent_configs_validation import validate
import modules.main.util.utilities as utilities


class PotentConfigs:
    """
    A class representing the POTENT run configs.

    Attributes:
        config_file (str): The path to the configs JSON file.
    """


    def __init__(self, configs_file_path: str = C.DEFAULT_CONFIG_FILE_PATH):
        """
        Initializes the POTENT configs.

        Args:
            configs_file_path (str): The path to the configs file. Should be JSON format.
        """

        # Fetch and validate configs.
        configs = self.__get_configs_from_file(configs_file_path=configs_file_path)
        validate(configs, configs_file_path=configs_file_path)

        # Store configs in memory.
        self.__jobs = configs[C.JOBS_KEY]
        self.__log_file_path = configs[C.LOG_FILE_PATH_KEY]
        self.__log_level = configs[C.LOG_LEVEL_KEY]
        self.__max_moves = configs[C.MAX_MOVES_KEY]
        self.__max_states = configs[C.MAX_STATES_KEY]
        self.__output_format = configs[C.OUTPUT_FORMAT_KEY]


    def __get_configs_from_file(self, configs_file_path: str) -> dict:
        """
        Parse the configs from the config file. Throw a detailed exception if there are problems.

        Args:
            configs_file_path (str): The path to the config file. Should be JSON format.

        Returns:
            dict: The parsed configs.
        """

        try:
            return utilities.read_json_file(file_path=configs_file_path)
        except FileNotFoundError:
            raise FileNotFoundError(f"The config file couldn't be found at `{configs_file_path}`.")


    def get_jobs(self) -> int:
        """Get the number of sigma oracle worker processes."""
        return self.__jobs


    def get_log_file_path(self) -> str:
        return self.__log_file_path


    def get_log_level(self) -> str:
        return self.__log_level


    def get_max_moves(self) -> int:
        """Get the most 2-switch applications allowed per realization walk."""
        return self.__max_moves


    def get_max_states(self) -> int:
        """Get the most distinct realizations visited per realization walk."""
        return self.__max_states


    def get_output_format(self) -> str:
        """Get the default output format: json, csv or text."""
        return self.__output_format
