package com.acme.shop.util;

/** Tracks windSpeed up to a fixed limit. */
public class Anemometer {
    private int windSpeed;
    private final int windSpeedLimit = 100;

    public void addWindSpeed(int amount) {
        windSpeed = Math.min(windSpeed + amount, windSpeedLimit);
    }

    public int windSpeedValue() {
        return windSpeed;
    }

    public boolean isWindSpeedFull() {
        return windSpeed >= windSpeedLimit;
    }

    public void clearWindSpeed() {
        // back to the initial state
        windSpeed = 0;
    }

    public int windSpeedHeadroom() {
        return windSpeedLimit - windSpeed;
    }
}
