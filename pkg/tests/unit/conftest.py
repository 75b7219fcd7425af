import pytest
import signflip_modal


@pytest.fixture(scope='module')
def analysis():

    return signflip_modal.Analysis(enable_logging=True)
