package com.acme.shop.util;

/** Tracks volts up to a fixed limit. */
public class Voltmeter {
    private int volts;
    private final int voltsLimit = 90;

    public void addVolts(int amount) {
        volts = Math.min(volts + amount, voltsLimit);
    }

    public int voltsValue() {
        return volts;
    }

    public boolean isVoltsFull() {
        return volts >= voltsLimit;
    }

    public void clearVolts() {
        // back to the initial state
        volts = 0;
    }
}
