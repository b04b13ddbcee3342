#pragma once

#include "doctest.h"
#include "qaff/error.hpp"
#include "qaff/laurent.hpp"

inline qaff::LaurentPoly P(const std::string& text) { return qaff::parse_poly(text); }

#define CHECK_ERROR_CODE(expr, expected)                 \
  do {                                                   \
    bool thrown_ = false;                                \
    try {                                                \
      (void)(expr);                                      \
    } catch (const qaff::Error& e_) {                    \
      thrown_ = true;                                    \
      CHECK_MESSAGE(e_.code() == (expected), e_.what()); \
    }                                                    \
    CHECK_MESSAGE(thrown_, #expr " did not throw");      \
  } while (0)
