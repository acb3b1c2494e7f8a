"""Study harness: datasets, schedules, stimuli, logs, and the trial runner."""
