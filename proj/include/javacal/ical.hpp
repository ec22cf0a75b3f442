// iCalendar (RFC 5545) export of weton recurrences and noble days.
//
// All events are all-day (VALUE=DATE).  A pure 35-day pattern — a weton, or a
// noble-day rule conditioned on weton alone — is emitted as one seed VEVENT
// with RRULE:FREQ=DAILY;INTERVAL=35.  Rules that also depend on wuku, wulan,
// dina, or taun have no iCalendar recurrence expressible at that cadence and
// are emitted as enumerated single events.  Output uses CRLF line endings and
// is deterministic for a given request.

#pragma once

#include <string>

#include "javacal/engine.hpp"

namespace javacal {

// Calendar of the given weton's occurrences in [from, until].  Throws
// domain_error if the range is malformed or starts before the epoch.
std::string ical_for_weton(Weton target, const GregorianDate& from,
                           const GregorianDate& until);

// Calendar of a noble-day rule's occurrences in [from, until].  Throws
// domain_error if the rule needs a wuku but no anchor is set, or if the
// range is malformed or starts before the epoch.  Days beyond schedule
// coverage cannot be evaluated for taun/wulan-conditioned rules, so the
// range is clamped to coverage for those.
std::string ical_for_mulya(const DinaMulyaRule& rule, const GregorianDate& from,
                           const GregorianDate& until, const CourtSchedule& schedule,
                           const CycleAnchors& anchors);

}  // namespace javacal
