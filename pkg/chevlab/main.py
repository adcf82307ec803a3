"""
FastAPI Application — chevlab report service.
Runs the same suites as the CLI and returns their reports as JSON.
"""
import logging
from contextlib import asynccontextmanager

from fastapi import FastAPI
from fastapi.middleware.cors import CORSMiddleware

from chevlab import __version__
from chevlab.api.routes import router, set_orchestrator
from chevlab.config import settings
from chevlab.runner.orchestrator import SuiteOrchestrator

logging.basicConfig(
    level=settings.log_level,
    format="%(asctime)s │ %(name)-20s │ %(levelname)-7s │ %(message)s",
    datefmt="%H:%M:%S",
)
logger = logging.getLogger(__name__)


@asynccontextmanager
async def lifespan(app: FastAPI):
    logger.info("🚀 Starting chevlab report service...")
    set_orchestrator(SuiteOrchestrator())
    yield
    logger.info("🛑 Shutting down chevlab...")
    set_orchestrator(None)


app = FastAPI(
    title="chevlab",
    description="Exact computations with universal Chevalley groups over finite commutative rings",
    version=__version__,
    lifespan=lifespan,
)

app.add_middleware(
    CORSMiddleware,
    allow_origins=["*"],
    allow_credentials=True,
    allow_methods=["*"],
    allow_headers=["*"],
)

app.include_router(router, prefix="/api")
