#pragma once

#include <chpf/error.hpp>
#include <chpf/exact_value.hpp>
#include <chpf/families.hpp>
#include <chpf/identities.hpp>
#include <chpf/numeric.hpp>
#include <chpf/pfaffian.hpp>
#include <chpf/polynomial.hpp>
#include <chpf/qcombinatorics.hpp>
#include <chpf/rational.hpp>
#include <chpf/skewop.hpp>
