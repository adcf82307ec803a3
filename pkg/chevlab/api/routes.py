"""
API Routes — health, suite listing and run endpoints.
"""
from fastapi import APIRouter, HTTPException
from fastapi.concurrency import run_in_threadpool

from chevlab import __version__
from chevlab.runner.models import Command, Report, RunConfig

router = APIRouter()
_orchestrator = None


def set_orchestrator(orchestrator):
    global _orchestrator
    _orchestrator = orchestrator


@router.get("/health")
async def health_check():
    return {"status": "healthy", "service": "chevlab", "version": __version__}


@router.get("/suites")
async def list_suites():
    if not _orchestrator:
        raise HTTPException(status_code=503, detail="Orchestrator not initialized")
    return _orchestrator.describe()


@router.post("/run/{command}", response_model=Report)
async def run_command(command: str, config: RunConfig):
    if not _orchestrator:
        raise HTTPException(status_code=503, detail="Orchestrator not initialized")
    try:
        selected = Command(command)
    except ValueError:
        raise HTTPException(status_code=404, detail=f"unknown command {command!r}")
    report = await run_in_threadpool(_orchestrator.run, config.model_copy(update={"command": selected}))
    if report.error:
        raise HTTPException(status_code=400, detail=report.error)
    return report
