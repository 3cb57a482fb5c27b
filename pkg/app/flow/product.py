from app.deligne import deligne_product_value
from app.flow.base import BaseFlow
from app.logger import logger
from app.scalars import CircleNumber
from app.spark import CircleSpark0, product_closed_form, product_engine, reduce_to_circle


class ClosedFormFlow(BaseFlow):
    """Evaluate the closed-form circle product on the Fourier data."""

    name: str = "closed"
    description: str = "NN'/2 + CN' - C'N + Σ (A'_k B_k - A_k B'_k) π k mod Z"

    async def execute(self, lhs: CircleSpark0, rhs: CircleSpark0) -> CircleNumber:
        return product_closed_form(lhs, rhs)


class EngineFlow(BaseFlow):
    """Build the bicomplex representative a∪f - r∪b and integrate it over the circle."""

    name: str = "engine"
    description: str = "cup-product representative on the three-arc cover, reduced to R/Z"

    async def execute(self, lhs: CircleSpark0, rhs: CircleSpark0) -> CircleNumber:
        cocycle = product_engine(lhs, rhs)
        logger.debug(f"engine representative: {cocycle}")
        return reduce_to_circle(cocycle)


class DeligneFlow(BaseFlow):
    """Multiply the Deligne images and map the product back to a spark class."""

    name: str = "deligne"
    description: str = "Čech-level Deligne cup of the images, mapped back and integrated"

    async def execute(self, lhs: CircleSpark0, rhs: CircleSpark0) -> CircleNumber:
        return deligne_product_value(lhs, rhs)
