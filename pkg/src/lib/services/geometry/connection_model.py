#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""
Connection Model Module

This module defines the ConnectionModel factory and the loader for model
files. A model file is a JSON object whose 'kind' selects the model:

    {"kind": "chart", "dim": 2, "gamma": [[["0", "x2"], ["0", "0"]], ...]}
    {"kind": "lie-group", "dim": 3, "structure": [...], "lambda": [...]}
"""

import json
from typing import Any, Dict, Type
from pydantic import ValidationError
from src.lib.core.log import Logger
from src.lib.services.geometry.connection_models.base import (
    BaseConnectionModel, ModelError)
from src.lib.services.geometry.connection_models.chart import (
    ChartConnectionModel)
from src.lib.services.geometry.connection_models.lie_group import (
    LieGroupConnectionModel)


logger = Logger().get_logger()


class ConnectionModel:  # pylint: disable=R0903
    """
    A connection model class that uses a factory pattern to return
    the selected model
    """

    _models: Dict[str, Type] = {
        'chart': ChartConnectionModel,
        'lie-group': LieGroupConnectionModel,
    }

    @staticmethod
    def create(config: Dict[str, Any]) -> BaseConnectionModel:
        """
        Return the connection model.

        :param config: Configuration dictionary containing the type of model.
        :return: An instance of the selected model.
        :raises ValueError: If 'type' is not in config or an unsupported type is provided.
        """
        model_type = config.get('type')
        if not model_type:
            raise ValueError("Configuration must include 'type'.")
        model_class = ConnectionModel._models.get(model_type)
        if not model_class:
            raise ValueError(f"Unsupported connection model type: {model_type}")
        return model_class(config)


def _validation_message(error: ValidationError) -> ModelError:
    first = error.errors()[0]
    path = ".".join(str(part) for part in first["loc"])
    where = f" at {path}" if path else ""
    return ModelError(f"Invalid model{where}: {first['msg']}", path=path or None)


def model_from_dict(data: Any) -> BaseConnectionModel:
    """
    Build a model from its JSON object.

    :param data: Parsed model file.
    :return: The connection model.
    :raises ModelError: On a missing or unsupported kind, or invalid fields.
    """
    if not isinstance(data, dict):
        raise ModelError("A model must be a JSON object")
    if "kind" not in data:
        raise ModelError("A model must include 'kind'", path="kind")
    config = {key: value for key, value in data.items() if key != "kind"}
    config["type"] = data["kind"]
    try:
        return ConnectionModel.create(config)
    except ValidationError as e:
        raise _validation_message(e) from e
    except ModelError:
        raise
    except ValueError as e:
        raise ModelError(str(e), path="kind") from e


def load_model(path: str) -> BaseConnectionModel:
    """
    Read a model file.

    :param path: JSON file path.
    :return: The connection model.
    :raises ModelError: On unreadable files, JSON syntax errors (with the
                        line) and validation errors (with the field path).
    """
    try:
        with open(path, 'r', encoding='utf-8') as file:
            text = file.read()
    except OSError as e:
        raise ModelError(f"Cannot read model file {path}: {e}") from e
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ModelError(f"{path}: line {e.lineno}, column {e.colno}: {e.msg}", line=e.lineno) from e
    model = model_from_dict(data)
    logger.info(f"Loaded {model.config.type} model from {path}")
    return model
