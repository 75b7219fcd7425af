"signflip_modal: Modal analysis of transmission problems across sign-changing interfaces."

from .signflip_modal import Analysis
from .core import CaseLabel, DEFAULT_TOLERANCES
from .disk_ball import DiskBallConfig
from .field_synthesis import ModalField
from .radiation import AbsorbingMedium, RadiationProfile
from .regularity_analysis import CoeffSequence, RegularityReport
from .scaled import ScaledValue
from .special_functions import Order
from .waveguide import KernelMode, TransverseBasis, WaveguideConfig

import logging

# Define the logging params
console_output_handler = logging.StreamHandler()
formatter = logging.Formatter("[%(asctime)s] [%(levelname)s] -- %(message)s")
console_output_handler.setFormatter(formatter)

log = logging.getLogger(__name__)
log.addHandler(console_output_handler)

__version__ = "1.0.0"
__author__ = "The signflip-modal developers"
__all__ = ["Analysis", "CaseLabel", "DEFAULT_TOLERANCES", "DiskBallConfig", "ModalField", "AbsorbingMedium",
           "RadiationProfile", "CoeffSequence", "RegularityReport", "ScaledValue", "Order", "KernelMode",
           "TransverseBasis", "WaveguideConfig"]
