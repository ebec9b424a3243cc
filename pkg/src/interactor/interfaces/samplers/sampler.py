""" Module provides the sampler interface
"""

from abc import ABC, abstractmethod

from src.domain.entities.engine_spec import EngineSpec
from src.domain.entities.sample_set import SampleSet
from src.domain.entities.spin_model import SpinModel


class SamplerInterface(ABC):
    """ Front end over the sampling engines
    """

    @abstractmethod
    def sample(self, model: SpinModel, engine: EngineSpec) -> SampleSet:
        """ Draw reads of a model.
        :param model: logical SpinModel
        :param engine: EngineSpec naming the engine and its parameters
        :return: SampleSet of the logical model
        """
