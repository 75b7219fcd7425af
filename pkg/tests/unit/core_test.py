import pytest

import signflip_modal
from signflip_modal import CaseLabel, DiskBallConfig
from signflip_modal.core import classify_media
from signflip_modal.exceptions import InvalidParameterException


@pytest.mark.parametrize('kappa, k_plus, k_minus, expected', [
    (-3.0, 2.0, 2.0, CaseLabel.STANDARD),
    (-1.0, 1.0, 3.0, CaseLabel.CRITICAL),
    (-1.0, 2.0, 2.0, CaseLabel.SUPER_CRITICAL),
    (-1.0 + 1e-14, 2.0, 2.0 + 1e-13, CaseLabel.SUPER_CRITICAL),
    (-1.0 + 1e-6, 2.0, 2.0, CaseLabel.STANDARD),
])
def test_classify_media(kappa, k_plus, k_minus, expected):

    assert classify_media(kappa, k_plus, k_minus, 1e-12) is expected


def test_classify_case_forced(analysis):
    config = DiskBallConfig(2, 1.0, -3.0, 2.0, 2.0)

    assert analysis.classify_case(config) is CaseLabel.STANDARD
    assert analysis.classify_case(config, force_case="supercritical") is CaseLabel.SUPER_CRITICAL


@pytest.mark.parametrize('spelling, expected', [
    ("standard", CaseLabel.STANDARD),
    ("Critical", CaseLabel.CRITICAL),
    ("SuperCritical", CaseLabel.SUPER_CRITICAL),
    ("super-critical", CaseLabel.SUPER_CRITICAL),
    ("SUPER_CRITICAL", CaseLabel.SUPER_CRITICAL),
    (CaseLabel.CRITICAL, CaseLabel.CRITICAL),
])
def test_case_label_parse(spelling, expected):

    assert CaseLabel.parse(spelling) is expected


def test_case_label_parse_invalid():
    with pytest.raises(InvalidParameterException):
        CaseLabel.parse("hyper")


def test_common_map_keeps_item_order():
    analysis = signflip_modal.Analysis(threads=4)

    assert analysis._common_map(lambda n: n * n, range(20)) == [n * n for n in range(20)]


def test_common_map_single_worker(mocker):
    analysis = signflip_modal.Analysis(threads=1)
    mock_pool = mocker.patch('signflip_modal.core.ThreadPoolExecutor', autospec=True)

    assert analysis._common_map(str, [1, 2, 3]) == ["1", "2", "3"]
    mock_pool.assert_not_called()
