import argparse

import uvicorn

from app.core.config import settings
from app.schemas.common_schema import CommandOutcome


def cmd_serve(args: argparse.Namespace) -> CommandOutcome:
    uvicorn.run(
        "app.main:app",
        host=args.host,
        port=args.port,
        reload=args.reload,
        log_config=settings.LOG_CONFIG,
    )
    return CommandOutcome(human_summary="server stopped")
