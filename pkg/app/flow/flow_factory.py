from enum import Enum

from app.flow.base import BaseFlow
from app.flow.product import ClosedFormFlow, DeligneFlow, EngineFlow


class FlowType(str, Enum):
    CLOSED = "closed"
    ENGINE = "engine"
    DELIGNE = "deligne"


class FlowFactory:
    """Factory for the product pipelines"""

    @staticmethod
    def create_flow(flow_type: FlowType, **kwargs) -> BaseFlow:
        flows = {
            FlowType.CLOSED: ClosedFormFlow,
            FlowType.ENGINE: EngineFlow,
            FlowType.DELIGNE: DeligneFlow,
        }

        flow_class = flows.get(FlowType(flow_type))
        if not flow_class:
            raise ValueError(f"Unknown flow type: {flow_type}")

        return flow_class(**kwargs)
