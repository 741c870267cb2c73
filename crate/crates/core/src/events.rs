//! Sudden death and sudden birth of entanglement in a sampled series.

use std::fmt;

pub const DEFAULT_THRESHOLD: f64 = 1e-9;
/// Samples at or below threshold needed before a death is declared.
pub const DEFAULT_SUSTAIN: usize = 3;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EventKind {
    /// Entanglement sudden death: positive to zero.
    Esd,
    /// Entanglement sudden birth: zero to positive.
    Esb,
}

impl fmt::Display for EventKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EventKind::Esd => "ESD",
            EventKind::Esb => "ESB",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Event {
    pub kind: EventKind,
    pub t: f64,
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct EventReport {
    pub events: Vec<Event>,
}

impl EventReport {
    pub fn count(&self, kind: EventKind) -> usize {
        self.events.iter().filter(|e| e.kind == kind).count()
    }

    pub fn first(&self, kind: EventKind) -> Option<f64> {
        self.events.iter().find(|e| e.kind == kind).map(|e| e.t)
    }

    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }
}

pub fn detect_events(times: &[f64], values: &[f64]) -> EventReport {
    detect_events_with(times, values, DEFAULT_THRESHOLD, DEFAULT_SUSTAIN)
}

/// Scans `values` for threshold crossings. A series that starts at zero
/// starts dead; dips shorter than `sustain` samples are ignored. Crossing
/// times are linearly interpolated between the bracketing samples.
pub fn detect_events_with(
    times: &[f64],
    values: &[f64],
    threshold: f64,
    sustain: usize,
) -> EventReport {
    assert_eq!(times.len(), values.len(), "times and values differ in length");
    let mut report = EventReport::default();
    if values.is_empty() {
        return report;
    }
    let crossing = |i: usize| {
        let (t0, t1) = (times[i - 1], times[i]);
        let (v0, v1) = (values[i - 1], values[i]);
        if v0 == v1 {
            t1
        } else {
            t0 + (threshold - v0) / (v1 - v0) * (t1 - t0)
        }
    };

    let mut alive = values[0] > threshold;
    let mut i = 1;
    while i < values.len() {
        let v = values[i];
        if alive && v <= threshold {
            let run = values[i..].iter().take_while(|&&x| x <= threshold).count();
            if run >= sustain.max(1) {
                report.events.push(Event {
                    kind: EventKind::Esd,
                    t: crossing(i),
                });
                alive = false;
            }
            i += run;
            continue;
        }
        if !alive && v > threshold {
            report.events.push(Event {
                kind: EventKind::Esb,
                t: crossing(i),
            });
            alive = true;
        }
        i += 1;
    }
    report
}
