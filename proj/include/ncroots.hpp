#pragma once

#include "ncroots/construct.hpp"
#include "ncroots/descriptors.hpp"
#include "ncroots/errors.hpp"
#include "ncroots/existence.hpp"
#include "ncroots/linalg.hpp"
#include "ncroots/matrix.hpp"
#include "ncroots/oracle.hpp"
#include "ncroots/polynomial.hpp"
#include "ncroots/prime_field.hpp"
#include "ncroots/quaternion.hpp"
#include "ncroots/rational.hpp"
#include "ncroots/ring.hpp"
