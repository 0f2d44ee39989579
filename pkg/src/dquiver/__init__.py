#!/usr/bin/env python3

import logging

import dquiver.dataclass.embedding
import dquiver.dataclass.quiver
import dquiver.dataclass.representation
import dquiver.field
import dquiver.linalg

# https://realpython.com/python-logging-source-code/#library-vs-application-logging-what-is-nullhandler
logging.getLogger(__name__).addHandler(logging.NullHandler())


QQ = dquiver.field.QQ
PrimeField = dquiver.field.PrimeField
ExactMatrix = dquiver.linalg.ExactMatrix

Quiver = dquiver.dataclass.quiver.Quiver
DimVector = dquiver.dataclass.quiver.DimVector
Representation = dquiver.dataclass.representation.Representation
GroupElement = dquiver.dataclass.representation.GroupElement
StarEmbedding = dquiver.dataclass.embedding.StarEmbedding
