import time
from abc import ABC, abstractmethod

from pydantic import BaseModel

from app.logger import logger
from app.scalars import CircleNumber
from app.spark import CircleSpark0


class BaseFlow(BaseModel, ABC):
    """Base class for pipelines that multiply two degree-0 sparks"""

    name: str
    description: str

    class Config:
        arbitrary_types_allowed = True

    async def run(self, lhs: CircleSpark0, rhs: CircleSpark0) -> CircleNumber:
        """Execute the pipeline and log its timing"""
        start_time = time.time()
        result = await self.execute(lhs, rhs)
        elapsed_time = time.time() - start_time
        logger.info(f"{self.name} pipeline: {result} in {elapsed_time:.3f}s")
        return result

    @abstractmethod
    async def execute(self, lhs: CircleSpark0, rhs: CircleSpark0) -> CircleNumber:
        """Compute the product class in R/Z"""
