import sys

PROGRAM_NAME = "vertex-cut-sparsifier"
PROGRAM_VERSION = "0.1.0"

DEBUG = "--debug" in sys.argv

# 穷举类算法的规模上限
BRUTEFORCE_MAX_VERTICES = 20
VECTOR_MAX_TERMINALS = 16
BIPARTITION_MAX_TERMINALS = 16
FULL_MAX_TERMINALS = 8
PARANOID_MAX_TERMINALS = 6
LOWERBOUND_MAX_K = 4

# 自动生成的顶点 id 前缀
SUBDIVISION_PREFIX = "__sub_"
COMPONENT_PREFIX = "__cmp_"
COPY_SEPARATOR = "__"

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
