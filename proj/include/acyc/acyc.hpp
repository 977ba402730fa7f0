#pragma once

#include <acyc/collapse.hpp>
#include <acyc/corpus.hpp>
#include <acyc/edge_list.hpp>
#include <acyc/errors.hpp>
#include <acyc/graph.hpp>
#include <acyc/kappa.hpp>
#include <acyc/orientation.hpp>
#include <acyc/tutte.hpp>
#include <acyc/verify.hpp>
