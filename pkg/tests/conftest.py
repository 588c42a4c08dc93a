import sys
from pathlib import Path

# 프로젝트 루트 디렉토리를 Python 경로에 추가
sys.path.insert(0, str(Path(__file__).parent.parent))

import pytest

from src.services.congruence_service import CongruenceService
from src.services.measure_service import MeasureService
from src.services.search_service import SearchService
from src.utils.config import get_measure_config, get_search_config


@pytest.fixture(scope="session")
def measure_service():
    return MeasureService(get_measure_config())


@pytest.fixture(scope="session")
def congruence_service(measure_service):
    return CongruenceService(measure_service)


@pytest.fixture(scope="session")
def search_service(measure_service):
    return SearchService(measure_service, get_search_config())
