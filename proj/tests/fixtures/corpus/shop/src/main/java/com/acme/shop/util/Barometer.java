package com.acme.shop.util;

/** Tracks pressure up to a fixed limit. */
public class Barometer {
    private int pressure;
    private final int pressureLimit = 30;

    public void addPressure(int amount) {
        pressure = Math.min(pressure + amount, pressureLimit);
    }

    public int pressureValue() {
        return pressure;
    }

    public boolean isPressureFull() {
        return pressure >= pressureLimit;
    }

    public void clearPressure() {
        // back to the initial state
        pressure = 0;
    }
}
