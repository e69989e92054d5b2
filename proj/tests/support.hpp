#pragma once

#include <doctest.h>

#include "hecke/error.hpp"

// Asserts that expr throws hecke::Error with the given code.
#define CHECK_ERRC(expr, errc)                                      \
  do {                                                              \
    bool thrown_ = false;                                           \
    try {                                                           \
      (void)(expr);                                                 \
    } catch (const hecke::Error& e_) {                              \
      thrown_ = true;                                               \
      CHECK_MESSAGE(e_.code() == (errc), e_.what());                \
    }                                                               \
    CHECK_MESSAGE(thrown_, "expected " #errc " from " #expr);       \
  } while (0)
