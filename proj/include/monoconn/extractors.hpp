#pragma once

#include "monoconn/extract_graph.hpp"
#include "monoconn/extract_many.hpp"
#include "monoconn/extract_report.hpp"
#include "monoconn/extract_two.hpp"
