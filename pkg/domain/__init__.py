from typing import Annotated

from pydantic import Field

from domain.commands.union import Command

Message = Annotated[
    Command,
    Field(discriminator='type'),
]
