package com.lambdaworks.redis;

public class ClientBuilder {
    private Timer timer;
    private EventLoopGroup group;
    private Class socketChannelClass;
    private String host;
    private int port;
    private long connectTimeout;
    private long commandTimeout;

    public RedisClient build() {
        return new RedisClient(timer, Executors.newFixedThreadPool(Runtime.getRuntime().availableProcessors() * 2), group, socketChannelClass, host, port, connectTimeout, commandTimeout);
    }
}
