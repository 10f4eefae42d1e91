"""
Module
------

    parser_interface.py

Description
-----------

    This module contains functions to perform various tasks which
    involve the parsing of dictionaries, lists, option strings, and
    other Python type comprehensions.

Functions
---------

    dict_formatter(in_dict)

        This function formats a Python dictionary; all UNICODE and
        data-type conversions are performed within this function.

    dict_key_value(dict_in, key, force=False, no_split=False)

        This function ingests a Python dictionary and a dictionary key
        and return the value(s) corresponding to the respective
        dictionary key.

    dict_toobject(in_dict)

        This function converts and returns the Python dictionary
        `in_dict`, specified upon entry, to a Python SimpleNamespace.

    enviro_get(envvar)

        This function retrieves the environment variable corresponding
        to the specified string.

    enviro_set(envvar, value)

        This function defines an environment variable.

    object_define()

        This function defines a Python SimpleNamespace object.

    object_getattr(object_in, key, force=False)

        This function ingests a Python object and a Python attribute
        and returns the value of the respective attribute.

    object_setattr(object_in, key, value)

        This function defines an attribute for a Python object.

    object_todict(object_in)

        This function returns a Python dictionary containing the
        contents of a SimpleNamespace or object.

    split_ids(string, sep=",")

        This function splits a delimited identifier string into a
        list of stripped, non-empty identifiers.

    string_parser(in_list)

        This function ingests a Python list of variables and returns a
        Python list of appropriately formatted values.

    typed_value(value)

        This function converts a Python string to the boolean,
        integer, float, or NoneType value it represents.

Author(s)
---------

    Henry R. Winterbottom; 29 November 2022

History
-------

    2022-11-29: Henry Winterbottom -- Initial implementation.

    2024-03-02: Henry Winterbottom -- Retained the dictionary, object,
                and environment helpers used by the sweep driver;
                string conversions now accept exponent notation.

"""

# ----

import collections
import os
from types import SimpleNamespace
from typing import Any, Dict, List, Union

from utils.exceptions_interface import ParserInterfaceError

# ----

# Define all available module properties.
__all__ = [
    "dict_formatter",
    "dict_key_value",
    "dict_toobject",
    "enviro_get",
    "enviro_set",
    "object_define",
    "object_getattr",
    "object_setattr",
    "object_todict",
    "split_ids",
    "string_parser",
    "typed_value",
]

# ----


def typed_value(value: Any) -> Any:
    """
    Description
    -----------

    This function converts a Python string to the boolean, integer,
    float, or NoneType value it represents; all other values are
    returned unchanged.

    Parameters
    ----------

    value: ``Any``

        A Python variable to be converted.

    Returns
    -------

    value: ``Any``

        A Python variable containing the converted value.

    """

    # Convert the string value; proceed accordingly.
    if not isinstance(value, str):
        return value
    string = value.strip()
    if string.lower() == "none":
        return None
    if string.lower() == "true":
        return True
    if string.lower() == "false":
        return False
    try:
        return int(string)
    except ValueError:
        pass
    try:
        return float(string)
    except ValueError:
        return string


# ----


def dict_formatter(in_dict: Dict) -> Dict:
    """
    Description
    -----------

    This function formats a Python dictionary; all UNICODE and
    data-type conversions are performed within this function.

    Parameters
    ----------

    in_dict: ``Dict``

        A standalone Python dictionary to be formatted.

    Returns
    -------

    out_dict: ``Dict``

        A standalone Python dictionary which has been formatted; the
        keys are sorted.

    """

    # Define local function to sort and format the input Python
    # dictionary upon entry.
    def sorted_by_keys(dct: Dict) -> collections.OrderedDict:
        new_dct = collections.OrderedDict()
        for key, value in sorted(dct.items(), key=lambda item: item[0]):
            if isinstance(value, dict):
                new_dct[key] = sorted_by_keys(value)
            else:
                new_dct[key] = typed_value(value)
        return new_dct

    # Define the formatted output dictionary.
    out_dict = sorted_by_keys(dct=in_dict)

    return out_dict


# ----


def dict_key_value(
    dict_in: Dict, key: str, force: bool = False, no_split: bool = False
) -> Union[List, Any]:
    """
    Description
    -----------

    This function ingests a Python dictionary and a dictionary key and
    return the value(s) corresponding to the respective dictionary
    key; if the optional variable `force` is True and the dictionary
    key does not exist within the Python dictionary, the function will
    return NoneType.

    Parameters
    ----------

    dict_in: ``Dict``

        A Python dictionary to be parsed.

    key: ``str``

        A Python string indicating the dictionary key within the
        Python dictionary (see above).

    Keywords
    --------

    force: ``bool``, optional

        A Python boolean variable; if True and in the absence of the
        respective dictionary key within the Python dictionary,
        NoneType is returned.

    no_split: ``bool``, optional

        A Python boolean variable; if True and if a string, the string
        will not be split into and returned as a comma-delimited list.

    Returns
    -------

    value: ``Union[List, Any]``

        A list of values collected from the ingested Python dictionary
        and the respective dictionary key if `no_split` is False; a
        string otherwise.

    Raises
    ------

    ParserInterfaceError:

        - raised if the dictionary key does not exist and `force` is
          False.

    """

    # Collect the dictionary attribute value; proceed accordingly.
    if key not in dict_in:
        if force:
            return None
        msg = f"Key {key} could not be found in user provided dictionary. Aborting!!!"
        raise ParserInterfaceError(msg=msg)
    value = dict_in[key]
    if no_split or not isinstance(value, str):
        return value
    value = string_parser(in_list=value.split(","))

    return value


# ----


def dict_toobject(in_dict: Dict) -> SimpleNamespace:
    """
    Description
    -----------

    This function converts and returns the Python dictionary
    `in_dict`, specified upon entry, to a Python SimpleNamespace
    `out_obj`.

    Parameters
    ----------

    in_dict: ``Dict``

        A Python dictionary containing the attribute key and value
        pairs to be cast as a Python SimpleNamespace.

    Returns
    -------

    out_obj: ``SimpleNamespace``

        A Python SimpleNamespace defined by casting the Python
        dictionary `in_dict` specified upon input.

    """

    # Define the Python namespace.
    out_obj = SimpleNamespace(**in_dict)

    return out_obj


# ----


def enviro_get(envvar: str) -> Union[bool, float, int, str, None]:
    """
    Description
    -----------

    This function retrieves the environment variable corresponding to
    the specified string; if the environment variable is not defined,
    NoneType is returned.

    Parameters
    ----------

    envvar: ``str``

        A Python string specifying the environment variable name.

    Returns
    -------

    envvarval: ``Union[bool, float, int, str, None]``

        A Python variable containing the environment variable value.

    """

    # Parse the run-time environment and return the attributes of the
    # environment variable specified upon entry.
    envvarval = os.environ.get(envvar)

    return envvarval


# ----


def enviro_set(envvar: str, value: Any) -> None:
    """
    Description
    -----------

    This function defines an environment variable.

    Parameters
    ----------

    envvar: ``str``

        A Python string specifying the environment variable name.

    value: ``Any``

        A Python variable containing the environment variable value;
        it is cast to a string.

    """

    # Define the environment variable.
    os.environ[envvar] = str(value)


# ----


def object_define() -> SimpleNamespace:
    """
    Description
    -----------

    This function defines a Python SimpleNamespace object.

    Returns
    -------

    object_out: ``SimpleNamespace``

        A Python SimpleNamespace object.

    """

    # Define the Python SimpleNamespace.
    object_out = SimpleNamespace()

    return object_out


# ----


def object_getattr(
    object_in: Union[SimpleNamespace, object], key: str, force: bool = False
) -> Any:
    """
    Description
    -----------

    This function ingests a Python object and a Python attribute and
    returns the value of the respective attribute; if `force` is
    `True` and the Python object attribute does not exist, this
    function returns NoneType.

    Parameters
    ----------

    object_in: ``Union[SimpleNamespace, object]``

        A Python SimpleNamespace or object within which to search for
        attributes.

    key: ``str``

        A Python string value specifying the attribute to seek.

    Keywords
    --------

    force: ``bool``, optional

        A Python boolean variable; if `True` and in the absence of the
        respective attribute within the Python object, NoneType is
        returned.

    Returns
    -------

    value: ``Any``

        The result of the respective attribute search.

    Raises
    ------

    ParserInterfaceError:

        - raised if `force` is `False` and the Python object attribute
          does not exist.

    """

    # Check whether the Python object passed upon entry contains the
    # key specified upon entry.
    if hasattr(object_in, key):
        return getattr(object_in, key)
    if force:
        return None
    msg = f"The object {object_in} does not contain attribute {key}. Aborting!!!"
    raise ParserInterfaceError(msg=msg)


# ----


def object_setattr(
    object_in: Union[SimpleNamespace, object], key: str, value: Any
) -> Union[SimpleNamespace, object]:
    """
    Description
    -----------

    This function ingests a Python SimpleNamespace or object and a
    Python key and value pair and defines the attributes for the
    respective SimpleNamespace or object.

    Parameters
    ----------

    object_in: ``Union[SimpleNamespace, object]``

        A Python SimpleNamespace or object to be updated.

    key: ``str``

        A Python string specifying the attribute name.

    value: ``Any``

        A Python variable specifying the attribute value.

    Returns
    -------

    object_out: ``Union[SimpleNamespace, object]``

       A Python SimpleNamespace or object containing the specified key
       and value pair (e.g., attribute).

    """

    # Define the new attribute using the key and value pair specified
    # upon entry.
    object_out = object_in
    setattr(object_out, key, value)

    return object_out


# ----


def object_todict(object_in: Union[SimpleNamespace, object]) -> Dict:
    """
    Description
    -----------

    This function ingests a Python SimpleNamespace or object and
    returns a Python dictionary containing the contents of the
    SimpleNamespace or object.

    Parameters
    ----------

    object_in: ``Union[SimpleNamespace, object]``

        A Python SimpleNamespace or object.

    Returns
    -------

    dict_out: ``Dict``

        A Python dictionary containing the object attributes; this is
        a copy and may be updated without side effects.

    """

    # Build a Python dictionary containing the contents of the Python
    # SimpleNamespace or object specified upon entry.
    dict_out = dict(vars(object_in))

    return dict_out


# ----


def split_ids(string: Union[str, List, None], sep: str = ",") -> List[str]:
    """
    Description
    -----------

    This function splits a delimited identifier string (e.g., the
    `--symbols` option) into a list of stripped, non-empty
    identifiers; lists are returned with each item stripped.

    Parameters
    ----------

    string: ``Union[str, List, None]``

        A Python string of delimited identifiers, a Python list of
        identifiers, or NoneType.

    Keywords
    --------

    sep: ``str``, optional

        A Python string specifying the delimiter.

    Returns
    -------

    ids: ``List[str]``

        A Python list of identifier strings; empty for NoneType.

    """

    # Split the identifier string; proceed accordingly.
    if string is None:
        return []
    items = string if isinstance(string, (list, tuple)) else str(string).split(sep)
    ids = [str(item).strip() for item in items if str(item).strip()]

    return ids


# ----


def string_parser(in_list: List) -> List:
    """
    Description
    -----------

    This function ingests a Python list of variables and returns a
    Python list of appropriately formatted values.

    Parameters
    ----------

    in_list: ``List``

        A Python list of variable values to be formatted.

    Returns
    -------

    out_list: ``List``

        A Python list of appropriately formatted variable values.

    """

    # Initialize and build the output list.
    out_list = [typed_value(value) for value in in_list]

    return out_list
