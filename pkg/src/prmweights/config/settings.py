from dotenv import load_dotenv
import os


# load defaults from .env
load_dotenv()

DEFAULT_WORKERS = int(os.getenv("PRM_WORKERS", "1"))
DEFAULT_VISIT_BUDGET = int(os.getenv("PRM_VISIT_BUDGET", str(10**8)))
DEFAULT_POINT_BUDGET = int(os.getenv("PRM_POINT_BUDGET", str(2 * 10**6)))
LOG_LEVEL = os.getenv("PRM_LOG_LEVEL", "INFO").upper()

# table-based field representation cap
MAX_FIELD_ORDER = 2**16
# full q x q tables up to this order, log/antilog above
FULL_TABLE_ORDER = 2**8
