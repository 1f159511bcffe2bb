# Config file key names:
JOBS_KEY = "jobs"
LOG_FILE_PATH_KEY = "log_file_path"
LOG_LEVEL_KEY = "log_level"
MAX_MOVES_KEY = "max_moves"
MAX_STATES_KEY = "max_states"
OUTPUT_FORMAT_KEY = "output_format"

# Config defaults:
DEFAULT_CONFIG_FILE_PATH = "./config.json"
DEFAULT_JOBS = 1
DEFAULT_LOG_FILE_PATH = "./log/potent.log"
DEFAULT_LOG_LEVEL = "INFO"
DEFAULT_MAX_MOVES = 1_000_000_000
DEFAULT_MAX_STATES = 5_000_000
DEFAULT_OUTPUT_FORMAT = "text"
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR")

# Output formats:
CSV_FORMAT = "csv"
JSON_FORMAT = "json"
TEXT_FORMAT = "text"
OUTPUT_FORMATS = (JSON_FORMAT, CSV_FORMAT, TEXT_FORMAT)

# Graph limits:
MAX_VERTICES = 64

# Pattern kinds:
CYCLE = "cycle"
CLIQUE = "clique"
MATCHING = "matching"
PATTERN_KINDS = (CYCLE, CLIQUE, MATCHING)

# Extremal construction kinds:
ODD = "odd"
EVEN = "even"

# Decisions:
YES = "yes"
NO = "no"
UNKNOWN = "unknown"

# Hypothesis outcomes:
HOLDS = "holds"
FAILS = "fails"

# Extension strategies:
ALREADY_PRESENT = "already_present"
LEMMA_A = "lemma_a"
LEMMA_B = "lemma_b"
LEMMA_C = "lemma_c"
INTERCHANGE = "interchange"
DOUBLE_INTERCHANGE = "double_interchange"
FALLBACK = "fallback"

# Sigma record key names:
PATTERN_KEY = "pattern"
N_KEY = "n"
SIGMA_KEY = "sigma"
WITNESS_KEY = "witness"
SEQUENCES_CHECKED_KEY = "sequences_checked"
UNKNOWN_KEY = "unknown"
IMPOSSIBLE = "impossible"
SIGMA_RECORD_COLUMN_NAMES = [PATTERN_KEY, N_KEY, SIGMA_KEY, WITNESS_KEY, SEQUENCES_CHECKED_KEY, UNKNOWN_KEY]

# Sigma table column names:
TABLE_PATTERN_KEY = "pattern"
TABLE_N_KEY = "n"
TABLE_ORACLE_KEY = "sigma_oracle"
TABLE_FORMULA_KEY = "sigma_formula"
TABLE_VALID_KEY = "valid"
TABLE_MATCH_KEY = "match"
TABLE_CERTIFIED_KEY = "certified"
TABLE_SOURCE_KEY = "source"

# Formula sources:
ODD_CYCLE_SOURCE = "m(2n-m-1)+2"
EVEN_CYCLE_SOURCE = "m(2n-m-1)+4"
C4_SOURCE = "2[(3n-1)/2]"
C6_AT_6_SOURCE = "sigma(C6,6)=24"
MATCHING_SOURCE = "(p-1)(2n-2)+2"
CLIQUE_SOURCE = "(k-2)(2n-k+1)+2"

# Exit codes:
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_UNCERTIFIED = 2
EXIT_INVARIANT_BREACH = 3

# Text format constants:
COMMENT_PREFIX = "#"
RANGE_SEPARATOR = ".."

# File extensions:
LOG_EXTENSION = ".log"

# Environment:
SLOW_TESTS_ENV_VAR = "POTENT_SLOW_TESTS"
