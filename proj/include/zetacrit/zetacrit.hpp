#ifndef ZETACRIT_ZETACRIT_HPP
#define ZETACRIT_ZETACRIT_HPP

#include "zetacrit/arg_tracker.hpp"
#include "zetacrit/constants.hpp"
#include "zetacrit/criteria.hpp"
#include "zetacrit/errors.hpp"
#include "zetacrit/gamma.hpp"
#include "zetacrit/quadrature.hpp"
#include "zetacrit/report.hpp"
#include "zetacrit/zero_locator.hpp"
#include "zetacrit/zero_table.hpp"
#include "zetacrit/zeta.hpp"

#endif
