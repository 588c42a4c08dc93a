import os
import sys
import logging
from dotenv import load_dotenv

# .env 파일 로드
load_dotenv()

def load_config():
    """설정 로드"""
    return {
        "app_name": os.getenv("APP_NAME", "린드-말러 측도 엔진"),
        "app_version": os.getenv("APP_VERSION", "1.0.0"),
        "log_level": os.getenv("LOG_LEVEL", "WARNING"),
        "default_threads": int(os.getenv("DEFAULT_THREADS", str(os.cpu_count() or 1))),
        "default_seed": int(os.getenv("DEFAULT_SEED", "0")),
        "max_factor_order": int(os.getenv("MAX_FACTOR_ORDER", "1000000")),
        "max_exponent": int(os.getenv("MAX_EXPONENT", "100000")),
    }

def get_measure_config():
    """측도 계산 설정 가져오기"""
    return {
        "max_group_order": int(os.getenv("MAX_GROUP_ORDER", "256")),
        "bareiss_cutoff": int(os.getenv("BAREISS_CUTOFF", "64")),
        "float_start_bits": int(os.getenv("FLOAT_START_BITS", "128")),
        "float_max_bits": int(os.getenv("FLOAT_MAX_BITS", "4096")),
        "cross_check": os.getenv("CROSS_CHECK", "True").lower() == "true",
    }

def get_search_config():
    """탐색 설정 가져오기"""
    return {
        "search_budget": int(os.getenv("SEARCH_BUDGET", "100000000")),
        "batch_size": int(os.getenv("SEARCH_BATCH_SIZE", "65536")),
        "symmetry_reduction": os.getenv("SYMMETRY_REDUCTION", "True").lower() == "true",
        "prune_even_f1": os.getenv("PRUNE_EVEN_F1", "True").lower() == "true",
    }

def setup_logging(level: str = None):
    """로깅 설정 (표준 에러로 출력)"""
    level = level or load_config()["log_level"]
    logging.basicConfig(
        stream=sys.stderr,
        level=getattr(logging, level.upper(), logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
